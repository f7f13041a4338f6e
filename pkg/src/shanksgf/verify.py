"""Per-m verification checks used by ``shanksgf verify``."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, List, Optional

from . import dirichlet, signedperm
from .arith import squarefree_decompose
from .closedform import expansion_terms, lambda_terms, predicted_L, recurrence_residual, s_coefficients

__all__ = ["CheckResult", "CHECKS", "run_checks", "enumeration_prediction"]

CHECKS = ("enum", "dirichlet", "recurrence", "facto")


@dataclass(frozen=True)
class CheckResult:
    check: str
    param: str
    tolerance: float
    deviation: Optional[float]  # None when the check was skipped
    passed: bool
    note: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


def enumeration_prediction(m: int, n: int) -> Optional[int]:
    """s_{m,n} rebuilt from counts of alternating signed permutations.

    Returns None when the base b of m = b u**2 exceeds the enumeration cap.
    """
    dec = squarefree_decompose(m)
    if dec.b > signedperm.MAX_R or n > signedperm.MAX_N:
        return None
    base = sum(e * signedperm.count(dec.b, p, n) for e, p in lambda_terms(dec.b))
    total = Fraction(0)
    for term in expansion_terms(dec):
        sigma = term.sigma_c if n % 2 == 0 else term.sigma_d
        total += term.weight * sigma * term.t**n * base
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral enumeration prediction for s_{{{m},{n}}}")
    return int(total)


def _enum(m: int, max_n: int) -> List[CheckResult]:
    values = s_coefficients(m, max_n)
    out = []
    for n in range(max_n + 1):
        predicted = enumeration_prediction(m, n)
        if predicted is None:
            out.append(CheckResult("enum", f"n={n}", 0.0, None, True, "skipped: beyond enumeration cap"))
            continue
        dev = float(abs(predicted - values[n]))
        out.append(CheckResult("enum", f"n={n}", 0.0, dev, dev == 0))
    return out


def _recurrence(m: int, max_n: int) -> List[CheckResult]:
    out = []
    for n in range(max_n + 1):
        for parity in ("even", "odd"):
            if parity == "odd" and n == 0:
                continue
            dev = float(abs(recurrence_residual(m, n, parity)))
            out.append(CheckResult("recurrence", f"n={n},{parity}", 0.0, dev, dev == 0))
    return out


def _dirichlet(m: int, svals: Iterable[int], blocks: Optional[int]) -> List[CheckResult]:
    out = []
    for s in svals:
        tol = 1e-4 if s == 1 else 1e-6
        if s % 2:
            oracle = dirichlet.L_plus(m, s, blocks)
        else:
            oracle = dirichlet.L_minus(m, s, blocks)
        dev = abs(oracle.value - predicted_L(m, s))
        out.append(CheckResult("dirichlet", f"s={s}", tol, dev, dev <= tol,
                               f"terms={oracle.terms_used}"))
    return out


def _facto(m: int, svals: Iterable[int], blocks: Optional[int]) -> List[CheckResult]:
    dec = squarefree_decompose(m)
    out = []
    for s in svals:
        lhs = dirichlet.L_plus(m, s, blocks).value
        correction = math.prod(1 - e / p**s for p, e in zip(dec.odd_primes, dec.eps_c))
        rhs = dirichlet.L_plus(dec.b, s, blocks).value * correction
        dev = abs(lhs - rhs)
        out.append(CheckResult("facto", f"s={s}", 1e-6, dev, dev <= 1e-6))
    return out


def run_checks(m: int, max_n: int = 6, checks: Iterable[str] = CHECKS,
               svals: Iterable[int] = (2, 3), blocks: Optional[int] = None) -> List[CheckResult]:
    checks = list(checks)
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    svals = tuple(svals)
    out: List[CheckResult] = []
    for name in CHECKS:
        if name not in checks:
            continue
        if name == "enum":
            out += _enum(m, max_n)
        elif name == "recurrence":
            out += _recurrence(m, max_n)
        elif name == "dirichlet":
            out += _dirichlet(m, svals, blocks)
        else:
            out += _facto(m, svals, blocks)
    return out
