"""Closed forms of s_m(x) = c_m(x) + d_m(x) and their coefficient sequences.

For square-free b > 1 the numerators cos(b x) c_b(x) and cos(b x) d_b(x)
are finite trigonometric sums whose shape depends on b mod 4. For general
m = b u**2 the Euler-product correction over the odd primes of u expands
into a signed sum of dilated copies of c_b and d_b:

    c_m(x) = sum_S K_b t_S / u * prod_{p in S} (-(-b/p)) * c_b(t_S x)
    d_m(x) = sum_S K_b t_S / u * prod_{p in S} (-( b/p)) * d_b(t_S x)

with t_S = u**2 / prod(S) and S running over subsets of the odd primes
of u. Subsets containing a prime with character value 0 contribute nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Literal, Tuple

from . import series as ps
from .arith import SquareFreeDecomposition, is_squarefree, jacobi, squarefree_decompose

__all__ = [
    "TrigTerm",
    "ClosedForm",
    "ExpansionTerm",
    "IntegralityError",
    "canonical",
    "build_base1",
    "build_squarefree",
    "lambda_terms",
    "from_lambda_terms",
    "expansion_terms",
    "build",
    "expand",
    "lambda_series",
    "s_coefficients",
    "hat_polynomial",
    "recurrence_residual",
    "predicted_L",
    "format_rational",
    "to_record",
    "from_record",
    "render",
]

Flavor = Literal["cos", "sin"]


class IntegralityError(ArithmeticError):
    """A generated coefficient was not a positive integer."""


@dataclass(frozen=True)
class TrigTerm:
    """coeff * flavor(num_freq x) / cos(den_freq x)."""

    coeff: Fraction
    flavor: Flavor
    num_freq: int
    den_freq: int

    def __post_init__(self) -> None:
        if self.flavor not in ("cos", "sin"):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if self.den_freq < 1 or not 0 <= self.num_freq <= self.den_freq:
            raise ValueError(f"bad frequencies {self.num_freq}/{self.den_freq}")
        if self.flavor == "sin" and self.num_freq == 0:
            raise ValueError("sin term with zero frequency")

    def key(self) -> Tuple[int, int, str]:
        return (self.den_freq, self.num_freq, self.flavor)


@dataclass(frozen=True)
class ClosedForm:
    m: int
    c_terms: Tuple[TrigTerm, ...]
    d_terms: Tuple[TrigTerm, ...]


@dataclass(frozen=True)
class ExpansionTerm:
    subset: Tuple[int, ...]
    t: int
    weight: Fraction
    sigma_c: int
    sigma_d: int


def canonical(terms: Iterable[TrigTerm]) -> Tuple[TrigTerm, ...]:
    """Merge like terms, drop zeros, sort by (den_freq, num_freq, flavor)."""
    acc: Dict[Tuple[int, int, str], Fraction] = {}
    for term in terms:
        acc[term.key()] = acc.get(term.key(), Fraction(0)) + term.coeff
    return tuple(
        TrigTerm(c, flavor, num, den)  # type: ignore[arg-type]
        for (den, num, flavor), c in sorted(acc.items())
        if c != 0
    )


def build_base1() -> ClosedForm:
    """s_1(x) = sec x + tan x."""
    return ClosedForm(
        m=1,
        c_terms=(TrigTerm(Fraction(1), "cos", 0, 1),),
        d_terms=(TrigTerm(Fraction(1), "sin", 1, 1),),
    )


def build_squarefree(b: int) -> ClosedForm:
    if b <= 1 or not is_squarefree(b):
        raise ValueError(f"build_squarefree needs a square-free b > 1, got {b}")
    c: List[TrigTerm] = []
    d: List[TrigTerm] = []

    def emit(eps: int, cos_freq: int, sin_freq: int) -> None:
        if eps:
            c.append(TrigTerm(Fraction(eps), "cos", cos_freq, b))
            d.append(TrigTerm(Fraction(eps), "sin", sin_freq, b))

    t = b // 4
    if b % 4 == 3:
        for k in range(1, t + 1):
            emit(jacobi(k, b), b - 4 * k, 4 * k)
        for k in range(t + 1, 2 * t + 2):
            emit(jacobi(k, b), 4 * k - b, 2 * b - 4 * k)
    elif b % 4 == 1:
        for k in range(1, t + 1):
            emit(jacobi(k, b), 4 * k, b - 4 * k)
        for k in range(t + 1, 2 * t + 1):
            emit(-jacobi(k, b), 2 * b - 4 * k, 4 * k - b)
    else:
        for k in range(1, 4 * t + 2, 2):
            emit(jacobi(-b, k), b - k, k)
    return ClosedForm(m=b, c_terms=canonical(c), d_terms=canonical(d))


def lambda_terms(b: int) -> List[Tuple[int, int]]:
    """s_b as a signed sum of Lambda_{b,p}; returns ``[(coeff, p), ...]``.

    Lambda_{r,p}(x) = (cos((r-p)x) + sin(px)) / cos(rx).
    """
    if b == 1:
        return [(1, 1)]
    if not is_squarefree(b):
        raise ValueError(f"lambda_terms needs a square-free b, got {b}")
    t = b // 4
    out: List[Tuple[int, int]] = []
    if b % 4 == 3:
        out += [(jacobi(k, b), 4 * k) for k in range(1, t + 1)]
        out += [(jacobi(k, b), 2 * b - 4 * k) for k in range(t + 1, 2 * t + 2)]
    elif b % 4 == 1:
        out += [(jacobi(k, b), b - 4 * k) for k in range(1, t + 1)]
        out += [(-jacobi(k, b), 4 * k - b) for k in range(t + 1, 2 * t + 1)]
    else:
        out += [(jacobi(-b, k), k) for k in range(1, 4 * t + 2, 2)]
    return [(e, p) for e, p in out if e]


def from_lambda_terms(r: int, terms: Iterable[Tuple[int, int]]) -> ClosedForm:
    c: List[TrigTerm] = []
    d: List[TrigTerm] = []
    for coeff, p in terms:
        c.append(TrigTerm(Fraction(coeff), "cos", r - p, r))
        if p:
            d.append(TrigTerm(Fraction(coeff), "sin", p, r))
    return ClosedForm(m=r, c_terms=canonical(c), d_terms=canonical(d))


def expansion_terms(dec: SquareFreeDecomposition) -> List[ExpansionTerm]:
    """One term per subset of the odd primes of u with nonzero characters."""
    primes = dec.odd_primes
    out: List[ExpansionTerm] = []
    for size in range(len(primes) + 1):
        for idx in combinations(range(len(primes)), size):
            if any(dec.eps_c[i] == 0 or dec.eps_d[i] == 0 for i in idx):
                continue
            prod = math.prod(primes[i] for i in idx)
            t = dec.u**2 // prod
            out.append(
                ExpansionTerm(
                    subset=tuple(primes[i] for i in idx),
                    t=t,
                    weight=dec.K_b * Fraction(t, dec.u),
                    sigma_c=math.prod(-dec.eps_c[i] for i in idx),
                    sigma_d=math.prod(-dec.eps_d[i] for i in idx),
                )
            )
    return out


@lru_cache(maxsize=512)
def build(m: int) -> ClosedForm:
    if m <= 0:
        raise ValueError(f"m must be a positive integer, got {m}")
    if m == 1:
        return build_base1()
    dec = squarefree_decompose(m)
    if dec.u == 1:
        return build_squarefree(m)
    base = build_base1() if dec.b == 1 else build_squarefree(dec.b)
    c: List[TrigTerm] = []
    d: List[TrigTerm] = []
    for e in expansion_terms(dec):
        for term in base.c_terms:
            c.append(TrigTerm(term.coeff * e.weight * e.sigma_c, "cos",
                              term.num_freq * e.t, term.den_freq * e.t))
        for term in base.d_terms:
            d.append(TrigTerm(term.coeff * e.weight * e.sigma_d, "sin",
                              term.num_freq * e.t, term.den_freq * e.t))
    return ClosedForm(m=m, c_terms=canonical(c), d_terms=canonical(d))


@lru_cache(maxsize=256)
def _sec_series(freq: int, order: int) -> ps.TruncatedSeries:
    return ps.reciprocal(ps.cos_series(freq, order))


def _terms_series(terms: Iterable[TrigTerm], order: int) -> ps.TruncatedSeries:
    by_den: Dict[int, ps.TruncatedSeries] = {}
    for term in terms:
        make = ps.cos_series if term.flavor == "cos" else ps.sin_series
        num = ps.scale(make(term.num_freq, order), term.coeff)
        prev = by_den.get(term.den_freq)
        by_den[term.den_freq] = num if prev is None else ps.add(prev, num)
    total = ps.constant(0, order)
    for den in sorted(by_den):
        total = ps.add(total, ps.mul(by_den[den], _sec_series(den, order)))
    return total


def expand(cf: ClosedForm, order: int) -> Tuple[ps.TruncatedSeries, ps.TruncatedSeries]:
    """Taylor series of the c part and d part up to x**order."""
    return _terms_series(cf.c_terms, order), _terms_series(cf.d_terms, order)


def lambda_series(r: int, p: int, order: int, sign: int = 1) -> ps.TruncatedSeries:
    """(cos((r-p)x) + sign*sin(px)) / cos(rx)."""
    if not 0 <= p <= r or r < 1:
        raise ValueError(f"need 0 <= p <= r, r >= 1; got r={r}, p={p}")
    num = ps.add(ps.cos_series(r - p, order), ps.scale(ps.sin_series(p, order), sign))
    return ps.mul(num, _sec_series(r, order))


@lru_cache(maxsize=1024)
def _s_coefficients(m: int, order: int) -> Tuple[int, ...]:
    c, d = expand(build(m), order)
    out: List[int] = []
    for n in range(order + 1):
        value = ps.egf_coefficient(c if n % 2 == 0 else d, n)
        if value.denominator != 1 or value <= 0:
            raise IntegralityError(f"s_{{{m},{n}}} = {value} is not a positive integer")
        out.append(int(value))
    return tuple(out)


def s_coefficients(m: int, N: int) -> List[int]:
    """[s_{m,0}, ..., s_{m,N}]: c_{m,n} at even positions, d_{m,n} at odd ones."""
    if m <= 0 or N < 0:
        raise ValueError(f"need m >= 1 and N >= 0, got m={m}, N={N}")
    return list(_s_coefficients(m, N))


def _cos_ratio(P: int) -> Dict[int, int]:
    """cos(P y)/cos(y) for odd P as a cosine polynomial {freq: coeff}."""
    out = {P - 1 - 2 * i: 2 * (-1) ** i for i in range((P - 1) // 2)}
    out[0] = (-1) ** ((P - 1) // 2)
    return out


def hat_polynomial(cf: ClosedForm) -> Tuple[Dict[int, Fraction], Dict[int, Fraction]]:
    """cos(m x) c_m(x) and cos(m x) d_m(x) as finite trig sums.

    Returns ``(cos_coeffs, sin_coeffs)`` mapping frequency to coefficient.
    Every denominator frequency must divide m with odd quotient.
    """
    cos_part: Dict[int, Fraction] = {}
    sin_part: Dict[int, Fraction] = {}
    for term in cf.c_terms + cf.d_terms:
        P, rem = divmod(cf.m, term.den_freq)
        if rem or P % 2 == 0:
            raise ValueError(f"cos({cf.m}x)/cos({term.den_freq}x) is not a trig polynomial")
        for j, q in _cos_ratio(P).items():
            half = term.coeff * q / 2
            a, b = term.num_freq, j * term.den_freq
            if term.flavor == "cos":
                for f in (abs(a - b), a + b):
                    cos_part[f] = cos_part.get(f, Fraction(0)) + half
            else:
                for f, sgn in ((a + b, 1), (abs(a - b), 1 if a >= b else -1)):
                    if f:
                        sin_part[f] = sin_part.get(f, Fraction(0)) + sgn * half
    return (
        {f: v for f, v in sorted(cos_part.items()) if v},
        {f: v for f, v in sorted(sin_part.items()) if v},
    )


def recurrence_residual(m: int, n: int, parity: Literal["even", "odd"]) -> Fraction:
    """Shanks-type recurrence residual; exactly zero when everything is consistent.

    even: sum_{i=0..n} (-1)^i m^{2i} C(2n,2i) c_{m,n-i} - (2n)! [x^{2n}] cos(mx) c_m(x)
    odd:  sum_{i=0..n-1} (-1)^i m^{2i} C(2n-1,2i) d_{m,n-i} - (2n-1)! [x^{2n-1}] cos(mx) d_m(x)
    """
    cos_part, sin_part = hat_polynomial(build(m))
    if parity == "even":
        if n < 0:
            raise ValueError("n must be >= 0")
        s = s_coefficients(m, 2 * n)
        lhs = sum((-1) ** i * m ** (2 * i) * math.comb(2 * n, 2 * i) * s[2 * (n - i)]
                  for i in range(n + 1))
        rhs = sum(v * (-1) ** n * f ** (2 * n) for f, v in cos_part.items())
    elif parity == "odd":
        if n < 1:
            raise ValueError("n must be >= 1")
        s = s_coefficients(m, 2 * n - 1)
        lhs = sum((-1) ** i * m ** (2 * i) * math.comb(2 * n - 1, 2 * i) * s[2 * (n - i) - 1]
                  for i in range(n))
        rhs = sum(v * (-1) ** (n - 1) * f ** (2 * n - 1) for f, v in sin_part.items())
    else:
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    return Fraction(lhs) - Fraction(rhs)


def predicted_L(m: int, s: int) -> float:
    """L_m(s) for odd s, L_{-m}(s) for even s, from the exact coefficients.

    Both cases reduce to s_{m,s-1} * K_m * sqrt(m) * (pi/2m)**s / (s-1)!.
    Evaluated in log space so huge coefficients do not overflow.
    """
    if s <= 0:
        raise ValueError(f"s must be a positive integer, got {s}")
    coeff = s_coefficients(m, s - 1)[s - 1]
    K = 0.5 if m == 1 else 1.0
    log_value = (math.log(coeff) + math.log(K) + 0.5 * math.log(m)
                 + s * math.log(math.pi / (2 * m)) - math.lgamma(s))
    return math.exp(log_value)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _parse_rational(text: str) -> Fraction:
    return Fraction(text)


def to_record(cf: ClosedForm) -> dict:
    def rec(term: TrigTerm) -> dict:
        return {
            "coeff": format_rational(term.coeff),
            "flavor": term.flavor,
            "num_freq": term.num_freq,
            "den_freq": term.den_freq,
        }

    return {
        "m": cf.m,
        "c_terms": [rec(t) for t in cf.c_terms],
        "d_terms": [rec(t) for t in cf.d_terms],
    }


def from_record(record: dict) -> ClosedForm:
    def term(r: dict) -> TrigTerm:
        return TrigTerm(_parse_rational(r["coeff"]), r["flavor"], int(r["num_freq"]), int(r["den_freq"]))

    return ClosedForm(
        m=int(record["m"]),
        c_terms=canonical(term(r) for r in record["c_terms"]),
        d_terms=canonical(term(r) for r in record["d_terms"]),
    )


def _freq(k: int) -> str:
    return "x" if k == 1 else f"{k}x"


def render(cf: ClosedForm) -> str:
    """One-line plain rendering, e.g. ``s_2(x) = + (1) cos(x)/cos(2x) + (1) sin(x)/cos(2x)``."""
    parts = []
    for term in cf.c_terms + cf.d_terms:
        sign = "-" if term.coeff < 0 else "+"
        parts.append(f"{sign} ({format_rational(abs(term.coeff))}) "
                     f"{term.flavor}({_freq(term.num_freq)})/cos({_freq(term.den_freq)})")
    return f"s_{cf.m}(x) = " + " ".join(parts)
