"""Runlength-limited binary words with a minimum zero-gap.

A word satisfies the gap constraint for parameter ``d`` when every pair
of successive 1s is separated by at least ``d`` zeros.  The module
provides exact counting, the noiseless capacity (growth rate of the
count), and an enumerative rank/unrank bijection between indices and
constrained words in lexicographic order (coordinate 0 leftmost, 0 < 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gf2 import BitWord

__all__ = [
    "RllSpec",
    "RllCountTable",
    "is_constrained",
    "is_constrained_value",
    "count_constrained",
    "noiseless_capacity",
    "enumerative_encode",
    "enumerative_decode",
    "payload_bits",
]


@dataclass(frozen=True)
class RllSpec:
    """Gap constraint: at least ``d`` zeros between successive 1s."""

    d: int

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("d must be nonnegative")

    @property
    def anchor_count(self) -> int:
        """Smallest e with 2**e >= d + 1 (equals d.bit_length()).

        Words supported on coordinates that are 2**e - 1 mod 2**e keep
        gaps of 2**e - 1 >= d zeros, which is what the anchored monomial
        constructions rely on.
        """
        return self.d.bit_length()


def is_constrained_value(value: int, d: int) -> bool:
    """Gap check on a packed word value; used by enumeration hot loops."""
    if d == 0:
        return True
    prev = -d - 1
    v = value
    while v:
        i = (v & -v).bit_length() - 1
        if i - prev <= d:
            return False
        prev = i
        v &= v - 1
    return True


def is_constrained(word: BitWord, spec: RllSpec) -> bool:
    """True when every pair of successive 1s has at least d zeros between."""
    return is_constrained_value(word.value, spec.d)


class RllCountTable:
    """Exact counts of constrained words by length, grown on demand.

    a(0) = 1, a(n) = n + 1 for 1 <= n <= d, and
    a(n) = a(n-1) + a(n-d-1) afterwards.  Counts are exact big integers.
    """

    def __init__(self, spec: RllSpec):
        self.spec = spec
        self._a = [1]

    def count(self, n: int) -> int:
        if n < 0:
            raise ValueError("length must be nonnegative")
        a, d = self._a, self.spec.d
        while len(a) <= n:
            k = len(a)
            a.append(k + 1 if k <= d else a[k - 1] + a[k - d - 1])
        return a[n]


_TABLES: dict[int, RllCountTable] = {}


def _table(spec: RllSpec) -> RllCountTable:
    tab = _TABLES.get(spec.d)
    if tab is None:
        tab = _TABLES[spec.d] = RllCountTable(spec)
    return tab


def count_constrained(n: int, spec: RllSpec) -> int:
    """Number of length-n words satisfying the gap constraint."""
    return _table(spec).count(n)


def noiseless_capacity(spec: RllSpec, tol: float = 1e-12) -> float:
    """log2 of the growth rate of the constrained-word count.

    The growth rate is the unique root in [1, 2] of x**(d+1) = x**d + 1,
    found by bisection to ``tol``.  d = 0 is unconstrained and returns
    1.0 exactly.
    """
    d = spec.d
    if d == 0:
        return 1.0
    lo, hi = 1.0, 2.0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid ** (d + 1) - mid**d - 1 < 0:
            lo = mid
        else:
            hi = mid
    return math.log2((lo + hi) / 2)


def enumerative_encode(index: int, n: int, spec: RllSpec) -> BitWord:
    """The constrained word of length n with lexicographic rank ``index``."""
    total = count_constrained(n, spec)
    if not 0 <= index < total:
        raise ValueError(f"index must be in [0, {total})")
    v = 0
    forced = 0
    rem = index
    for pos in range(n):
        if forced:
            forced -= 1
            continue
        zeros_first = count_constrained(n - pos - 1, spec)
        if rem < zeros_first:
            continue
        rem -= zeros_first
        v |= 1 << pos
        forced = spec.d
    return BitWord(v, n)


def enumerative_decode(word: BitWord, spec: RllSpec) -> int:
    """Lexicographic rank of a constrained word (inverse of encoding)."""
    if not is_constrained(word, spec):
        raise ValueError("word violates the gap constraint")
    n = len(word)
    idx = 0
    forced = 0
    for pos in range(n):
        if forced:
            forced -= 1
            continue
        if word[pos]:
            idx += count_constrained(n - pos - 1, spec)
            forced = spec.d
    return idx


def payload_bits(n: int, spec: RllSpec) -> int:
    """floor(log2) of the constrained-word count: whole input bits per block."""
    return count_constrained(n, spec).bit_length() - 1
