"""Coset-based transmission of gap-constrained words over noisy channels.

The outer code is a Reed-Muller code with columns permuted so that the
information set occupies the first k positions, then row-reduced to a
systematic generator.  A message picks a constrained prefix w by
enumerative coding; the codeword tail (the redundancy the constraint
would otherwise break) is shipped separately, split into parts that are
each encoded with an anchored gap-respecting inner subcode.  Every
transmitted symbol stream then satisfies the gap constraint end to end.

Decoding runs in two stages: recover each tail part from its inner
code, then solve the outer system in which tail coordinates are known
exactly and prefix coordinates carry the channel observation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import BEC, BSC, ERASED, binary_entropy
from .gf2 import BitWord, BinaryMatrix
from .ordering import Ordering
from .rll import (
    RllSpec,
    enumerative_decode,
    enumerative_encode,
    is_constrained,
    noiseless_capacity,
    payload_bits,
)
from .rm import RmCode, select_order
from .subcodes import RllSubcode, build_subcode

__all__ = [
    "CosetPlan",
    "build_plan",
    "coset_leader",
    "CosetTransmission",
    "encode",
    "DecodeResult",
    "decode",
    "coset_rate_lower_bound",
    "crossover_capacity",
    "bsc_threshold",
]


@dataclass(frozen=True)
class CosetPlan:
    """Frozen arithmetic and matrices for one transmission configuration."""

    m: int
    r: int
    spec: RllSpec
    part_exponent: int
    inner_order: int
    k: int
    outer_length: int
    part_length: int
    part_count: int
    pad_bits: int
    payload_bits: int
    permutation: Ordering
    outer_gen: BinaryMatrix
    inner: RllSubcode

    @property
    def inner_exponent(self) -> int:
        return self.inner.parent.m

    @property
    def total_length(self) -> int:
        return self.k + self.part_count * self.part_length

    @property
    def realized_rate(self) -> float:
        return self.payload_bits / self.total_length


def build_plan(
    m: int,
    r: int,
    spec: RllSpec,
    part_exponent: int,
    inner_order: int | None = None,
) -> CosetPlan:
    """Derive all plan quantities from (m, r, d, part exponent, inner order).

    Parts have length 2**(m - part_exponent + z) with z = d.bit_length().
    When no inner order is given, the order-selection rule is applied to
    the inner length with the outer code rate.
    """
    z = spec.anchor_count
    if part_exponent < 1:
        raise ValueError("part exponent must be at least 1")
    n_inner = m - part_exponent + z
    if n_inner < 1:
        raise ValueError("part exponent too large: parts would be empty")
    outer = RmCode(m, r)
    k, length = outer.k, outer.n
    if inner_order is None:
        inner_order = select_order(n_inner, k / length)
    if not z <= inner_order <= n_inner:
        raise ValueError(
            f"inner order must lie in [{z}, {n_inner}] for a nonzero inner subcode"
        )
    inner = build_subcode(RmCode(n_inner, inner_order), spec)
    tail = length - k
    part_count = -(-tail // inner.k)
    pad = part_count * inner.k - tail

    perm = tuple(sorted(range(length), key=lambda i: (i.bit_count(), i)))
    permutation = Ordering(m, perm, "explicit")
    permuted_rows = []
    for v in outer.gen.row_values:
        pv = 0
        for j, c in enumerate(perm):
            pv |= ((v >> c) & 1) << j
        permuted_rows.append(pv)
    sys_gen, pivots = BinaryMatrix(permuted_rows, length).rref()
    if pivots != tuple(range(k)):
        raise AssertionError("permuted information set failed to pivot first")

    return CosetPlan(
        m=m,
        r=r,
        spec=spec,
        part_exponent=part_exponent,
        inner_order=inner_order,
        k=k,
        outer_length=length,
        part_length=1 << n_inner,
        part_count=part_count,
        pad_bits=pad,
        payload_bits=payload_bits(k, spec),
        permutation=permutation,
        outer_gen=sys_gen,
        inner=inner,
    )


def coset_leader(codeword: BitWord, plan: CosetPlan) -> BitWord:
    """Tail of a permuted-code codeword, zero on the first k coordinates.

    Adding the leader to the codeword clears the tail, so the sum is the
    systematic prefix padded with zeros.  The leader always lies in the
    span of the permuted complement basis.
    """
    if len(codeword) != plan.outer_length:
        raise ValueError("codeword length mismatch")
    return BitWord((codeword.value >> plan.k) << plan.k, plan.outer_length)


@dataclass(frozen=True)
class CosetTransmission:
    """Everything emitted for one message."""

    prefix: BitWord
    parts: tuple[BitWord, ...]
    outer_codeword: BitWord
    message_index: int

    @property
    def transmitted(self) -> BitWord:
        out = self.prefix
        for p in self.parts:
            out = out.concat(p)
        return out


def encode(message_index: int, plan: CosetPlan) -> CosetTransmission:
    """Map a message index to its constrained transmission.

    The prefix is the enumeratively encoded message; the systematic
    codeword tail, zero-padded at the end to a multiple of the inner
    dimension, is encoded part by part with the inner subcode.  Each
    part starts with at least d zeros, so the concatenation of prefix
    and parts is globally constrained.
    """
    if not 0 <= message_index < (1 << plan.payload_bits):
        raise ValueError("message index out of range")
    w = enumerative_encode(message_index, plan.k, plan.spec)
    c = plan.outer_gen.vecmat(w)
    tail_bits = c.value >> plan.k
    dim = plan.inner.k
    mask = (1 << dim) - 1
    parts = []
    for i in range(plan.part_count):
        u = BitWord((tail_bits >> (i * dim)) & mask, dim)
        parts.append(plan.inner.encode(u))
    return CosetTransmission(
        prefix=w, parts=tuple(parts), outer_codeword=c, message_index=message_index
    )


@dataclass(frozen=True)
class DecodeResult:
    """status "message" carries the decoded index; "ambiguous" means an
    erasure pattern left multiple candidates; "failure" names the stage
    ("part:<i>" or "outer") whose system had no solution."""

    status: str
    message: int | None = None
    stage: str | None = None

    @property
    def is_message(self) -> bool:
        return self.status == "message"


def _packed(obs: np.ndarray) -> int:
    """Packed integer of a 0/1 observation slice."""
    if obs.size == 0:
        return 0
    raw = np.packbits(obs == 1, bitorder="little")
    return int.from_bytes(raw.tobytes(), "little")


def _decode_bec(prefix_obs: np.ndarray, parts_obs: np.ndarray, plan: CosetPlan):
    dim = plan.inner.k
    npart = plan.part_length
    tail_val = 0
    for i in range(plan.part_count):
        obs = parts_obs[i * npart : (i + 1) * npart]
        erased = obs == ERASED
        if erased.any():
            cols = np.flatnonzero(~erased)
            sub = plan.inner.gen.column_submatrix(int(c) for c in cols)
            sol = sub.solve_right(BitWord(_packed(obs[cols]), len(cols)))
        else:
            sol = plan.inner.gen.solve_right(BitWord(_packed(obs), npart))
        if sol.status == "underdetermined":
            return DecodeResult("ambiguous")
        if sol.status == "inconsistent":
            return DecodeResult("failure", stage=f"part:{i}")
        tail_val |= sol.vector.value << (i * dim)
    k, length = plan.k, plan.outer_length
    tail_val &= (1 << (length - k)) - 1  # padding carries no information

    erased = prefix_obs == ERASED
    if erased.any():
        keep = np.flatnonzero(~erased)
        cols = [int(c) for c in keep] + list(range(k, length))
        system = plan.outer_gen.column_submatrix(cols)
        y = BitWord(_packed(prefix_obs[keep]) | (tail_val << len(keep)), len(cols))
    else:
        system = plan.outer_gen
        y = BitWord(_packed(prefix_obs) | (tail_val << k), length)
    sol = system.solve_right(y)
    if sol.status == "underdetermined":
        return DecodeResult("ambiguous")
    if sol.status == "inconsistent":
        return DecodeResult("failure", stage="outer")
    w = sol.vector
    if not is_constrained(w, plan.spec):
        return DecodeResult("failure", stage="outer")
    index = enumerative_decode(w, plan.spec)
    if index >= 1 << plan.payload_bits:
        return DecodeResult("failure", stage="outer")
    return DecodeResult("message", message=index)


def _decode_bsc(prefix_obs: np.ndarray, parts_obs: np.ndarray, plan: CosetPlan):
    dim = plan.inner.k
    if dim > 16:
        raise ValueError("exhaustive inner decoding supports dimension at most 16")
    if plan.payload_bits > 20:
        raise ValueError("exhaustive prefix decoding supports at most 20 payload bits")
    npart = plan.part_length
    codebook = [
        plan.inner.encode(BitWord(u, dim)).value for u in range(1 << dim)
    ]
    tail_val = 0
    for i in range(plan.part_count):
        yv = _packed(parts_obs[i * npart : (i + 1) * npart])
        best_u = min(range(1 << dim), key=lambda u: (codebook[u] ^ yv).bit_count())
        tail_val |= best_u << (i * dim)
    k, length = plan.k, plan.outer_length
    tail_val &= (1 << (length - k)) - 1

    yv1 = _packed(prefix_obs)
    best = None
    best_dist = None
    for index in range(1 << plan.payload_bits):
        w = enumerative_encode(index, k, plan.spec)
        c = plan.outer_gen.vecmat(w)
        if c.value >> k != tail_val:
            continue
        dist = (w.value ^ yv1).bit_count()
        if best_dist is None or dist < best_dist:
            best, best_dist = index, dist
    if best is None:
        return DecodeResult("failure", stage="outer")
    return DecodeResult("message", message=best)


def decode(
    prefix_obs: np.ndarray,
    parts_obs: np.ndarray,
    plan: CosetPlan,
    channel,
) -> DecodeResult:
    """Two-stage decode of the prefix/parts observations.

    Erasure channels solve exact linear systems: part messages first,
    then the outer system with known tail and observed prefix; an
    underdetermined system reports ambiguity, never a guess.  Flip
    channels use exhaustive minimum-distance decoding per part and an
    exhaustive scan of constrained prefixes consistent with the
    recovered tail.
    """
    prefix_obs = np.asarray(prefix_obs)
    parts_obs = np.asarray(parts_obs)
    if prefix_obs.shape != (plan.k,):
        raise ValueError("prefix observation length mismatch")
    if parts_obs.shape != (plan.part_count * plan.part_length,):
        raise ValueError("parts observation length mismatch")
    if isinstance(channel, BEC):
        return _decode_bec(prefix_obs, parts_obs, plan)
    if isinstance(channel, BSC):
        return _decode_bsc(prefix_obs, parts_obs, plan)
    raise TypeError(f"unsupported channel {channel!r}")


def coset_rate_lower_bound(
    noiseless_cap: float, channel_capacity: float, spec: RllSpec, part_exponent: int
) -> float:
    """Achievable-rate lower bound of the scheme in the large-m regime.

    With z = d.bit_length(), C the channel capacity and C0 the
    constraint capacity, the bound is
    C0 * C^2 * 2^-z / (C^2 * 2^-z + 1 - C + 2^-part_exponent).
    """
    if not 0.0 < channel_capacity <= 1.0:
        raise ValueError("channel capacity must lie in (0, 1]")
    if not 0.0 < noiseless_cap <= 1.0:
        raise ValueError("constraint capacity must lie in (0, 1]")
    if part_exponent < 1:
        raise ValueError("part exponent must be at least 1")
    scale = 2.0 ** (-spec.anchor_count)
    num = noiseless_cap * channel_capacity * channel_capacity * scale
    den = (
        channel_capacity * channel_capacity * scale
        + 1.0
        - channel_capacity
        + 2.0 ** (-part_exponent)
    )
    return num / den


def crossover_capacity(
    spec: RllSpec, part_exponent: int, tol: float = 1e-6
) -> float | None:
    """Channel capacity above which the coset bound beats the plain
    anchored-subcode bound C * 2^-z, or None when no crossover exists
    in (0, 1)."""
    c0 = noiseless_capacity(spec)
    scale = 2.0 ** (-spec.anchor_count)

    def gap(c: float) -> float:
        return coset_rate_lower_bound(c0, c, spec, part_exponent) - c * scale

    grid = [k / 1000.0 for k in range(1, 1001)]
    lo = None
    hi = None
    for a, b in zip(grid, grid[1:]):
        if gap(a) <= 0.0 < gap(b):
            lo, hi = a, b
            break
    if lo is None:
        return None
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if gap(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def bsc_threshold(capacity_value: float, tol: float = 1e-9) -> float:
    """Flip probability in [0, 1/2] whose channel capacity equals the
    given value (capacity is decreasing in p on this interval)."""
    if not 0.0 <= capacity_value <= 1.0:
        raise ValueError("capacity must lie in [0, 1]")
    target = 1.0 - capacity_value
    lo, hi = 0.0, 0.5
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if binary_entropy(mid) < target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2
