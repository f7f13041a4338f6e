"""Integer primitives: Jacobi/Kronecker symbols, factorization, square-free parts.

Python ints are arbitrary precision and ``fractions.Fraction`` is always
reduced with a positive denominator, so those two types serve as the
Integer and Rational of the rest of the package.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

__all__ = [
    "jacobi",
    "kronecker",
    "is_probable_prime",
    "factor",
    "is_squarefree",
    "SquareFreeDecomposition",
    "squarefree_decompose",
    "landau_residual",
]


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1.

    Negative ``a`` uses (-1/n) = (-1)**((n-1)/2); (a/1) = 1 for every a.
    """
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"jacobi: modulus must be odd and positive, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for n >= 1; agrees with :func:`jacobi` for odd n."""
    if n <= 0:
        raise ValueError(f"kronecker: n must be positive, got {n}")
    result = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    return result * jacobi(a, n)


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with the first twelve prime bases (deterministic below 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factor(n: int) -> Dict[int, int]:
    """Prime factorization ``{p: e}`` by trial division, keys increasing."""
    if n <= 0:
        raise ValueError(f"factor: n must be positive, got {n}")
    out: Dict[int, int] = {}
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e:
        out[2] = e
    d = 3
    tested = 0  # cofactor last checked with Miller-Rabin
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out[d] = e
        elif d > 1000 and n != tested:
            if is_probable_prime(n):
                break
            tested = n
        d += 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_squarefree(n: int) -> bool:
    return n >= 1 and all(e == 1 for e in factor(n).values())


@dataclass(frozen=True)
class SquareFreeDecomposition:
    """m = b * u**2 with b square-free.

    ``eps_c[i]`` is (-b/odd_primes[i]) and ``eps_d[i]`` is (b/odd_primes[i]).
    """

    m: int
    b: int
    u: int
    odd_primes: Tuple[int, ...]
    eps_c: Tuple[int, ...]
    eps_d: Tuple[int, ...]
    K_b: Fraction


def squarefree_decompose(m: int) -> SquareFreeDecomposition:
    if m <= 0:
        raise ValueError(f"squarefree_decompose: m must be positive, got {m}")
    b = u = 1
    for p, e in factor(m).items():
        u *= p ** (e // 2)
        if e % 2:
            b *= p
    odd: List[int] = [p for p in factor(u) if p != 2] if u > 1 else []
    return SquareFreeDecomposition(
        m=m,
        b=b,
        u=u,
        odd_primes=tuple(odd),
        eps_c=tuple(jacobi(-b, p) for p in odd),
        eps_d=tuple(jacobi(b, p) for p in odd),
        K_b=Fraction(1, 2) if b == 1 else Fraction(1),
    )


def _landau_admissible(m: int) -> bool:
    if m == 0:
        return False
    if not (m % 4 == 1 or m % 16 in (8, 12)):
        return False
    return all(e == 1 for p, e in factor(abs(m)).items() if p != 2)


def landau_residual(m: int, l: int) -> float:
    """|(m/l) - m**-1/2 * sum_r (m/r) exp(2 pi i l r/|m|)| in double precision.

    ``m`` must be a fundamental discriminant (m = 1 mod 4, or 8/12 mod 16,
    with no odd square factor). The square root is the principal one, so it
    is i*sqrt(|m|) for negative m.
    """
    if l <= 0 or l % 2 == 0:
        raise ValueError(f"landau_residual: l must be odd and positive, got {l}")
    if not _landau_admissible(m):
        raise ValueError(f"landau_residual: m={m} violates the congruence/square-free hypotheses")
    M = abs(m)
    total = 0j
    for r in range(1, M + 1):
        chi = kronecker(m, r)
        if chi:
            total += chi * cmath.exp(2j * math.pi * ((l * r) % M) / M)
    root = cmath.sqrt(m) if m > 0 else 1j * math.sqrt(M)
    return abs(jacobi(m, l) - total / root)
