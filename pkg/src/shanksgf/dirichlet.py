"""Floating-point oracle for L_m(s), L_{-m}(s) and the odd-harmonic Fourier series.

L_m(s)    = sum over odd l of (-m/l) l**-s
L_{-m}(s) = sum over odd l of ( m/l) l**-s

Both characters are periodic in l with period dividing 4m, so sums are
taken over whole periods ("blocks"). Within a block the character is read
from a precomputed table and the summation is vectorized with numpy.
Partial sums are accumulated in a fixed chunk order, so results do not
depend on how the work is split.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Optional, Tuple

import numpy as np

from .arith import is_squarefree, jacobi

__all__ = [
    "LValue",
    "FourierCombination",
    "MAX_SUMMANDS",
    "L_plus",
    "L_minus",
    "fourier_S",
    "fourier_C",
    "lemma_combination",
    "lemma_value",
]

MAX_SUMMANDS = 10**7
_CHUNK = 1 << 20


@dataclass(frozen=True)
class LValue:
    value: float
    error_bound: float
    terms_used: int


@dataclass(frozen=True)
class FourierCombination:
    m: int
    kind: Literal["S", "C"]
    eps: Tuple[int, ...]
    y: Tuple[Fraction, ...]


@lru_cache(maxsize=64)
def _character_table(a: int, period: int) -> Tuple[np.ndarray, np.ndarray]:
    """Odd residues l in [1, period) with (a/l) != 0, and the character values."""
    ls = [l for l in range(1, period, 2) if jacobi(a, l)]
    chi = [jacobi(a, l) for l in ls]
    return np.array(ls, dtype=np.int64), np.array(chi, dtype=np.float64)


def _default_blocks(period: int, s: int) -> int:
    per_block = period // 2
    max_blocks = max(1, MAX_SUMMANDS // per_block)
    if s == 1:
        return max_blocks
    # smallest L with L**(1-s)/(2(s-1)) < 1e-13, rounded up to whole periods
    L = (1e-13 * 2 * (s - 1)) ** (-1.0 / (s - 1))
    return max(2, min(max_blocks, int(L // period) + 2))


def _block_sums(a: int, s: int, blocks: int) -> Tuple[np.ndarray, int]:
    """Sum of (a/l) l**-s over each complete period; returns (per-block sums, P)."""
    period = 4 * abs(a)
    residues, chi = _character_table(a, period)
    out = np.empty(blocks, dtype=np.float64)
    per_chunk = max(1, _CHUNK // max(1, residues.size))
    for start in range(0, blocks, per_chunk):
        stop = min(blocks, start + per_chunk)
        k = np.arange(start, stop, dtype=np.float64)[:, None]
        l = k * period + residues[None, :]
        out[start:stop] = (chi[None, :] * l ** (-float(s))).sum(axis=1)
    return out, period


def _dirichlet(a: int, s: int, blocks: Optional[int]) -> LValue:
    period = 4 * abs(a)
    if blocks is None:
        blocks = _default_blocks(period, s)
    if blocks < 1:
        raise ValueError("blocks must be >= 1")
    sums, period = _block_sums(a, s, blocks)
    partial = np.cumsum(sums)
    terms = blocks * (period // 2)
    if s == 1:
        if blocks < 2:
            return LValue(float(partial[-1]), float("inf"), terms)
        value = 0.5 * (partial[-1] + partial[-2])
        # block sums decay like A/k**2, so the tail beyond K blocks is about K * (last block)
        error = blocks * abs(float(sums[-1])) + abs(float(sums[-1]))
        return LValue(float(value), error, terms)
    start = blocks * period + 1
    error = (start - 2) ** (1 - s) / (2 * (s - 1))
    return LValue(float(partial[-1]), error, terms)


def L_plus(m: int, s: int, blocks: Optional[int] = None) -> LValue:
    """L_m(s) = sum over odd l of (-m/l) / l**s.

    For s >= 2 the value is the plain complete-block partial sum and the
    error bound is the rigorous absolute tail sum_{odd l >= L} l**-s. For
    s = 1 the value averages the last two block partial sums and the error
    bound is the heuristic K * |last block sum|.
    """
    if m <= 0:
        raise ValueError(f"m must be positive, got {m}")
    if s <= 0:
        raise ValueError(f"L_plus needs s >= 1, got {s}")
    return _dirichlet(-m, s, blocks)


def L_minus(m: int, s: int, blocks: Optional[int] = None) -> LValue:
    """L_{-m}(s) = sum over odd l of (m/l) / l**s, for s >= 2."""
    if m <= 0:
        raise ValueError(f"m must be positive, got {m}")
    if s <= 1:
        raise ValueError(f"L_minus needs s >= 2, got {s}")
    return _dirichlet(m, s, blocks)


def _odd_harmonics(y: Fraction, K: int, trig, power: int) -> float:
    if K < 1:
        raise ValueError("K must be >= 1")
    num, den = y.numerator, y.denominator
    total = 0.0
    for start in range(0, K, _CHUNK):
        k = np.arange(start, min(K, start + _CHUNK), dtype=np.int64)
        odd = 2 * k + 1
        # reduce the phase exactly before converting to float
        phase = (odd * num) % den
        total += float((trig(2 * np.pi * phase / den) / odd.astype(np.float64) ** power).sum())
    return total


def fourier_S(n: int, y: Fraction, K: int) -> float:
    """Partial sum of S_{2n+1}(y) = sum_k sin(2 pi (2k+1) y) / (2k+1)**(2n+1), K terms."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _odd_harmonics(Fraction(y), K, np.sin, 2 * n + 1)


def fourier_C(n: int, y: Fraction, K: int) -> float:
    """Partial sum of C_{2n}(y) = sum_k cos(2 pi (2k+1) y) / (2k+1)**(2n), K terms."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _odd_harmonics(Fraction(y), K, np.cos, 2 * n)


def lemma_combination(m: int, kind: Literal["S", "C"]) -> FourierCombination:
    """Signs and evaluation points expressing L_m(2n+1) (kind S) or L_{-m}(2n) (kind C).

    L_m(2n+1)  = 2/sqrt(m) * sum_k eps_k S_{2n+1}(y_k)
    L_{-m}(2n) = 2/sqrt(m) * sum_k eps_k C_{2n}(y_k)

    Zero characters are dropped.
    """
    if m <= 1 or not is_squarefree(m):
        raise ValueError(f"lemma_combination needs a square-free m > 1, got {m}")
    if kind not in ("S", "C"):
        raise ValueError(f"kind must be 'S' or 'C', got {kind!r}")
    r = m % 4
    if (kind == "S" and r == 3) or (kind == "C" and r == 1):
        pairs = [(jacobi(k, m), Fraction(k, m)) for k in range(1, (m - 1) // 2 + 1)]
    else:
        sign = -1 if kind == "S" else 1
        pairs = [(jacobi(sign * m, k), Fraction(k, 4 * m)) for k in range(1, m, 2)]
    pairs = [(e, y) for e, y in pairs if e]
    return FourierCombination(m, kind, tuple(e for e, _ in pairs), tuple(y for _, y in pairs))


def lemma_value(comb: FourierCombination, n: int, K: int) -> float:
    """2/sqrt(m) * sum_k eps_k * S_{2n+1}(y_k) (or C_{2n}) with K terms each."""
    f = fourier_S if comb.kind == "S" else fourier_C
    total = sum(e * f(n, y, K) for e, y in zip(comb.eps, comb.y))
    return 2.0 / math.sqrt(comb.m) * total
