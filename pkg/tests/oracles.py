"""Independent reference implementations used to freeze expected values.

Everything here is deliberately naive and written against plain numpy
arrays / Python lists, sharing no code paths with the package, so a bug
in the packed-integer implementations cannot hide in its own test.
"""

from __future__ import annotations

import numpy as np


def numpy_rank(matrix: np.ndarray) -> int:
    """Rank over GF(2) by textbook row elimination on a uint8 array."""
    a = np.array(matrix, dtype=np.uint8, copy=True) % 2
    if a.size == 0:
        return 0
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        pivot = next((i for i in range(rank, rows) if a[i, c]), None)
        if pivot is None:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        for i in range(rows):
            if i != rank and a[i, c]:
                a[i] ^= a[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def numpy_rref(matrix: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form over GF(2) plus pivot columns."""
    a = np.array(matrix, dtype=np.uint8, copy=True) % 2
    rows, cols = a.shape
    pivots = []
    pr = 0
    for c in range(cols):
        pivot = next((i for i in range(pr, rows) if a[i, c]), None)
        if pivot is None:
            continue
        a[[pr, pivot]] = a[[pivot, pr]]
        for i in range(rows):
            if i != pr and a[i, c]:
                a[i] ^= a[pr]
        pivots.append(c)
        pr += 1
        if pr == rows:
            break
    return a, tuple(pivots)


def gap_ok(bits, d: int) -> bool:
    """Direct definition: every pair of successive 1s has >= d zeros between."""
    ones = [i for i, b in enumerate(bits) if b]
    return all(b - a - 1 >= d for a, b in zip(ones, ones[1:]))


def brute_constrained_words(n: int, d: int) -> list[tuple[int, ...]]:
    """All length-n constrained words in lexicographic order (coordinate 0
    leftmost, 0 < 1), by filtering the full cube."""
    out = []
    for v in range(1 << n):
        bits = tuple((v >> (n - 1 - i)) & 1 for i in range(n))
        if gap_ok(bits, d):
            out.append(bits)
    out.sort()
    return out


def transfer_matrix_capacity(d: int) -> float:
    """log2 of the spectral radius of the (d+1)-state gap automaton.

    State s counts zeros still owed after a 1; emitting 1 is allowed
    only in state 0 and re-enters state d; emitting 0 decrements the
    debt (staying at 0 once it is paid).
    """
    size = d + 1
    a = np.zeros((size, size))
    a[0, 0] += 1.0  # emit 0 with no debt
    a[0, d] += 1.0  # emit 1, owe d zeros (same state when d = 0)
    for s in range(1, size):
        a[s, s - 1] = 1.0  # emit 0, pay one down
    radius = max(abs(np.linalg.eigvals(a)))
    return float(np.log2(radius))


def min_nonzero_weight(rows: np.ndarray) -> int:
    """Exhaustive minimum weight over all nonzero row combinations."""
    k, _ = rows.shape
    best = None
    for u in range(1, 1 << k):
        word = np.zeros(rows.shape[1], dtype=np.uint8)
        for i in range(k):
            if (u >> i) & 1:
                word ^= rows[i]
        w = int(word.sum())
        if best is None or w < best:
            best = w
    return best


def eval_monomial_pointwise(m: int, variables, index: int) -> int:
    """Value of the monomial prod x_j at the point with this index,
    reading variable j from bit (m - j) of the index."""
    return int(all((index >> (m - j)) & 1 for j in variables))
