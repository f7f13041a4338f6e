"""Brute-force enumeration of Lambda-alternating augmented r-signed permutations.

A word is (G, (i_1, j_1), ..., (i_n, j_n)) with signs i_k in [r] and
(j_1, ..., j_n) a permutation of [n]. Labels (i, j) are ordered
lexicographically; the special label G sits between (r-p, n) and
(r-p+1, 1). A word is alternating when its descent set is exactly the
even positions, i.e. G < g_1 > g_2 < g_3 > ...
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Optional, Tuple, Union

__all__ = [
    "SPECIAL",
    "Label",
    "AugmentedSignedPermutation",
    "compare_labels",
    "descent_set",
    "is_alternating",
    "words",
    "count",
    "count_first_sign_band",
    "MAX_R",
    "MAX_N",
]

MAX_R = 4
MAX_N = 8

SPECIAL = "G"
Label = Union[str, Tuple[int, int]]


@dataclass(frozen=True)
class AugmentedSignedPermutation:
    r: int
    p: int
    signs: Tuple[int, ...]
    values: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.p <= self.r:
            raise ValueError(f"need 0 <= p <= r, got p={self.p}, r={self.r}")
        if len(self.signs) != len(self.values):
            raise ValueError("signs and values must have equal length")
        if sorted(self.values) != list(range(1, len(self.values) + 1)):
            raise ValueError(f"values {self.values} are not a permutation of [n]")
        if any(not 1 <= i <= self.r for i in self.signs):
            raise ValueError(f"signs {self.signs} outside [1, {self.r}]")

    @property
    def n(self) -> int:
        return len(self.values)

    def labels(self) -> Tuple[Label, ...]:
        return (SPECIAL,) + tuple(zip(self.signs, self.values))


def _rank(r: int, p: int, label: Label) -> Tuple[int, int]:
    # G ranks as (r-p, +inf): above every (r-p, j), below every (r-p+1, j)
    if label == SPECIAL:
        return (r - p, 1 << 62)
    return label  # type: ignore[return-value]


def compare_labels(r: int, p: int, a: Label, b: Label) -> int:
    """-1, 0 or 1 as a is below, equal to or above b in the Lambda order."""
    ka, kb = _rank(r, p, a), _rank(r, p, b)
    return (ka > kb) - (ka < kb)


def descent_set(perm: AugmentedSignedPermutation) -> Tuple[int, ...]:
    g = perm.labels()
    return tuple(k for k in range(1, len(g)) if compare_labels(perm.r, perm.p, g[k - 1], g[k]) > 0)


def is_alternating(perm: AugmentedSignedPermutation) -> bool:
    return descent_set(perm) == tuple(range(2, perm.n + 1, 2))


def _check_caps(r: int, p: int, n: int) -> None:
    if not 1 <= r <= MAX_R or not 0 <= p <= r or not 0 <= n <= MAX_N:
        raise ValueError(f"enumeration limited to 1 <= r <= {MAX_R}, 0 <= p <= r, "
                         f"0 <= n <= {MAX_N}; got r={r}, p={p}, n={n}")


def words(r: int, p: int, n: int) -> Iterator[AugmentedSignedPermutation]:
    """All r**n * n! augmented r-signed permutations, unfiltered."""
    for values in permutations(range(1, n + 1)):
        for signs in product(range(1, r + 1), repeat=n):
            yield AugmentedSignedPermutation(r, p, signs, values)


def _count(r: int, p: int, n: int, first_sign: Optional[Tuple[int, int]] = None) -> int:
    """Depth-first count of alternating words, pruning at the first bad comparison.

    ``first_sign`` restricts i_1 to an inclusive range. Labels are encoded as
    integers (i-1)*n + j so lexicographic order becomes integer order.
    """
    if n == 0:
        return 1 if first_sign is None else 0
    lo_sign, hi_sign = first_sign if first_sign else (1, r)
    g_code = (r - p - 1) * n + n  # G lies just above code of (r-p, n)
    full = (1 << n) - 1

    def extend(pos: int, last: int, used: int) -> int:
        if used == full:
            return 1
        up = pos % 2 == 1  # position pos must ascend when odd, descend when even
        total = 0
        free = full & ~used
        while free:
            bit = free & -free
            free ^= bit
            j = bit.bit_length()
            for i in range(1, r + 1):
                code = (i - 1) * n + j
                if (code > last) if up else (code < last):
                    total += extend(pos + 1, code, used | bit)
        return total

    total = 0
    for i in range(max(lo_sign, 1), min(hi_sign, r) + 1):
        for j in range(1, n + 1):
            code = (i - 1) * n + j
            if code > g_code:
                total += extend(2, code, 1 << (j - 1))
    return total


def count(r: int, p: int, n: int) -> int:
    """Number of Lambda-alternating augmented r-signed permutations of [n]."""
    _check_caps(r, p, n)
    return _count(r, p, n)


def count_first_sign_band(r: int, p1: int, p2: int, n: int) -> int:
    """Alternating words (p2 order) whose first sign lies in [r-p2+1, r-p1]."""
    if not 0 <= p1 < p2 <= r:
        raise ValueError(f"need 0 <= p1 < p2 <= r, got p1={p1}, p2={p2}, r={r}")
    _check_caps(r, p2, n)
    if n == 0:
        return 0
    return _count(r, p2, n, first_sign=(r - p2 + 1, r - p1))
