"""Exact truncated Taylor series with rational coefficients.

A series stores plain Taylor coefficients a_0..a_N; exponential
generating function coefficients are produced only at the boundary by
:func:`egf_coefficient`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Tuple, Union

__all__ = [
    "TruncatedSeries",
    "constant",
    "cos_series",
    "sin_series",
    "add",
    "scale",
    "mul",
    "reciprocal",
    "dilate",
    "egf_coefficient",
]

Number = Union[int, Fraction]


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")

    @classmethod
    def of(cls, values: Iterable[Number]) -> "TruncatedSeries":
        return cls(tuple(Fraction(v) for v in values))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, scale(other, -1))

    def __neg__(self) -> "TruncatedSeries":
        return scale(self, -1)

    def __mul__(self, other: Union["TruncatedSeries", Number]) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def constant(c: Number, order: int) -> TruncatedSeries:
    return TruncatedSeries((Fraction(c),) + (Fraction(0),) * order)


def cos_series(freq: int, order: int) -> TruncatedSeries:
    """Taylor coefficients of cos(freq*x) up to x**order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    out = [Fraction(0)] * (order + 1)
    for n in range(0, order + 1, 2):
        sign = -1 if (n // 2) % 2 else 1
        out[n] = Fraction(sign * freq**n, factorial(n))
    return TruncatedSeries(tuple(out))


def sin_series(freq: int, order: int) -> TruncatedSeries:
    """Taylor coefficients of sin(freq*x) up to x**order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    out = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1, 2):
        sign = -1 if (n // 2) % 2 else 1
        out[n] = Fraction(sign * freq**n, factorial(n))
    return TruncatedSeries(tuple(out))


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(tuple(a.coeffs[k] + b.coeffs[k] for k in range(n + 1)))


def scale(a: TruncatedSeries, c: Number) -> TruncatedSeries:
    c = Fraction(c)
    return TruncatedSeries(tuple(c * x for x in a.coeffs))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller order."""
    n = min(a.order, b.order)
    out = [Fraction(0)] * (n + 1)
    bc = b.coeffs
    for i in range(n + 1):
        ai = a.coeffs[i]
        if not ai:
            continue
        for j in range(n + 1 - i):
            if bc[j]:
                out[i + j] += ai * bc[j]
    return TruncatedSeries(tuple(out))


def reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """1/a via b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}."""
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroDivisionError("reciprocal of a series with zero constant term")
    inv0 = 1 / a0
    out = [inv0]
    for n in range(1, a.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            ak = a.coeffs[k]
            if ak:
                acc += ak * out[n - k]
        out.append(-acc * inv0)
    return TruncatedSeries(tuple(out))


def dilate(a: TruncatedSeries, t: int) -> TruncatedSeries:
    """Series of x -> a(t*x)."""
    if t < 1:
        raise ValueError("dilation factor must be a positive integer")
    return TruncatedSeries(tuple(c * t**n for n, c in enumerate(a.coeffs)))


def egf_coefficient(a: TruncatedSeries, n: int) -> Fraction:
    """n! * a_n."""
    if not 0 <= n <= a.order:
        raise IndexError(f"coefficient {n} outside series of order {a.order}")
    return a.coeffs[n] * factorial(n)
