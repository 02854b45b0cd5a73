"""Coordinate orderings and run structure of information sets.

An ordering is a permutation of the 2**m coordinates: position j of the
reordered word holds coordinate perm[j].  Scanning positions in order,
the coordinates belonging to an information set split into maximal
contiguous runs; the run structure controls how large a gap-constrained
linear subcode can be.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from statistics import fmean
from typing import Iterable, Sequence

import numpy as np

from .rll import RllSpec
from .rm import RmCode

__all__ = [
    "Ordering",
    "lexicographic_ordering",
    "gray_ordering",
    "explicit_ordering",
    "sample_permutation",
    "RunProfile",
    "run_profile",
    "lex_run_count",
    "subcode_dimension_bound",
    "asymptotic_linear_bound",
    "PermutationSample",
    "PermutationExperiment",
    "permutation_bound_experiment",
]


@dataclass(frozen=True)
class Ordering:
    """Permutation of the coordinates [0, 2**m); position j holds perm[j]."""

    m: int
    perm: tuple[int, ...]
    kind: str  # "lexicographic" | "gray" | "explicit" | "sampled"
    seed: object = None

    def __post_init__(self):
        n = 1 << self.m
        if len(self.perm) != n or sorted(self.perm) != list(range(n)):
            raise ValueError("perm must be a permutation of [0, 2**m)")
        if self.kind == "gray":
            for a, b in zip(self.perm, self.perm[1:]):
                if (a ^ b).bit_count() != 1:
                    raise ValueError("gray ordering must step one bit at a time")

    def inverse(self) -> tuple[int, ...]:
        """Position of each coordinate."""
        out = [0] * len(self.perm)
        for pos, coord in enumerate(self.perm):
            out[coord] = pos
        return tuple(out)


def lexicographic_ordering(m: int) -> Ordering:
    return Ordering(m, tuple(range(1 << m)), "lexicographic")


def gray_ordering(m: int) -> Ordering:
    """Reflected binary ordering: position j holds coordinate j ^ (j >> 1)."""
    return Ordering(m, tuple(j ^ (j >> 1) for j in range(1 << m)), "gray")


def explicit_ordering(m: int, perm: Sequence[int]) -> Ordering:
    return Ordering(m, tuple(perm), "explicit")


def sample_permutation(m: int, seed) -> Ordering:
    """Uniformly random ordering from a deterministic seeded stream."""
    rng = np.random.default_rng(seed)
    perm = tuple(int(x) for x in rng.permutation(1 << m))
    return Ordering(m, perm, "sampled", seed=seed)


@dataclass(frozen=True)
class RunProfile:
    """Run decomposition of an index set under an ordering.

    ``runs`` lists maximal blocks of consecutive positions whose
    coordinates are in the set, as (start position, length) pairs.
    ``bounded_runs`` counts runs whose final position has a successor
    (a run ending at the last position is excluded).  ``tuple_count``
    sums floor(length / (d + 1)) over all runs: the number of disjoint
    (d+1)-tuples of in-set positions.  ``size`` is the set size.
    """

    runs: tuple[tuple[int, int], ...]
    bounded_runs: int
    tuple_count: int
    size: int


def run_profile(info_set: Iterable[int], ordering: Ordering, spec: RllSpec) -> RunProfile:
    members = frozenset(info_set)
    n = 1 << ordering.m
    if members and not all(0 <= i < n for i in members):
        raise ValueError("index set outside [0, 2**m)")
    runs: list[tuple[int, int]] = []
    start = None
    for pos, coord in enumerate(ordering.perm):
        if coord in members:
            if start is None:
                start = pos
        elif start is not None:
            runs.append((start, pos - start))
            start = None
    if start is not None:
        runs.append((start, n - start))
    bounded = len(runs)
    if runs and runs[-1][0] + runs[-1][1] == n:
        bounded -= 1
    t = sum(length // (spec.d + 1) for _, length in runs)
    return RunProfile(tuple(runs), bounded, t, sum(length for _, length in runs))


def lex_run_count(m: int, r: int) -> int:
    """Closed form C(m-1, r) for the bounded-run count of the weight-<=r
    index set under the identity ordering (valid for 0 <= r <= m-1)."""
    if not 0 <= r <= m - 1:
        raise ValueError("r must lie in 0..m-1")
    return comb(m - 1, r)


def subcode_dimension_bound(k: int, tuple_count: int, spec: RllSpec) -> int:
    """Upper bound max(k - d*t, 0) on the dimension of any linear subcode
    whose nonzero codewords all satisfy the gap constraint."""
    if k < 0 or tuple_count < 0:
        raise ValueError("arguments must be nonnegative")
    return max(k - spec.d * tuple_count, 0)


def asymptotic_linear_bound(rate: float, spec: RllSpec) -> float:
    """Large-m limit rate / (d + 1) of the dimension bound."""
    if not 0.0 < rate < 1.0:
        raise ValueError("rate must lie strictly between 0 and 1")
    return rate / (spec.d + 1)


@dataclass(frozen=True)
class PermutationSample:
    index: int
    run_count: int
    bounded_runs: int
    tuple_count: int
    dimension_bound: int
    rate_bound: float


@dataclass(frozen=True)
class PermutationExperiment:
    m: int
    r: int
    d: int
    k: int
    seed: int
    samples: tuple[PermutationSample, ...]
    mean_bound: float
    max_bound: float


def permutation_bound_experiment(
    code: RmCode, spec: RllSpec, samples: int, seed: int
) -> PermutationExperiment:
    """Dimension bound statistics over uniformly sampled orderings.

    Sample i uses the stream seeded with (seed, i), so results do not
    depend on evaluation order.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    info = code.information_set()
    out = []
    for i in range(samples):
        ordering = sample_permutation(code.m, [seed, i])
        prof = run_profile(info, ordering, spec)
        dim = subcode_dimension_bound(code.k, prof.tuple_count, spec)
        out.append(
            PermutationSample(
                index=i,
                run_count=len(prof.runs),
                bounded_runs=prof.bounded_runs,
                tuple_count=prof.tuple_count,
                dimension_bound=dim,
                rate_bound=dim / code.n,
            )
        )
    bounds = [s.rate_bound for s in out]
    return PermutationExperiment(
        m=code.m,
        r=code.r,
        d=spec.d,
        k=code.k,
        seed=seed,
        samples=tuple(out),
        mean_bound=fmean(bounds),
        max_bound=max(bounds),
    )
