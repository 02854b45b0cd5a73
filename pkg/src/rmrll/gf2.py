"""Bit-packed linear algebra over GF(2).

Words and matrix rows are stored as Python integers, with bit ``i``
holding coordinate/column ``i`` (coordinate 0 is the first transmitted
symbol).  Arbitrary-precision integers give word-parallel XOR row
operations for free, so elimination over a few thousand columns stays
fast without any third-party dependency.  All objects are immutable
after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = ["BitWord", "BinaryMatrix", "Solution"]


class BitWord:
    """Immutable binary word of fixed length.

    The string form reads coordinate 0 first, so ``BitWord.from_string("0110")``
    has 1s at coordinates 1 and 2.
    """

    __slots__ = ("_v", "_n")

    def __init__(self, value: int, length: int):
        if length < 0:
            raise ValueError("length must be nonnegative")
        if value < 0 or value >> length:
            raise ValueError(f"value {value} does not fit in {length} bits")
        self._v = value
        self._n = length

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitWord":
        v = 0
        n = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError("bits must be 0 or 1")
            v |= b << n
            n += 1
        return cls(v, n)

    @classmethod
    def from_string(cls, text: str) -> "BitWord":
        return cls.from_bits(int(c) for c in text)

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "BitWord":
        arr = np.asarray(arr)
        if arr.size == 0:
            return cls(0, 0)
        packed = np.packbits(arr.astype(bool), bitorder="little")
        return cls(int.from_bytes(packed.tobytes(), "little"), int(arr.size))

    @classmethod
    def zeros(cls, n: int) -> "BitWord":
        return cls(0, n)

    @classmethod
    def ones(cls, n: int) -> "BitWord":
        return cls((1 << n) - 1, n)

    @property
    def value(self) -> int:
        return self._v

    @property
    def weight(self) -> int:
        return self._v.bit_count()

    def __len__(self) -> int:
        return self._n

    def __getitem__(self, key):
        if isinstance(key, slice):
            start, stop, step = key.indices(self._n)
            if step != 1:
                raise ValueError("only contiguous slices are supported")
            width = max(stop - start, 0)
            return BitWord((self._v >> start) & ((1 << width) - 1), width)
        if not 0 <= key < self._n:
            raise IndexError("coordinate out of range")
        return (self._v >> key) & 1

    def __iter__(self) -> Iterator[int]:
        return ((self._v >> i) & 1 for i in range(self._n))

    def __xor__(self, other: "BitWord") -> "BitWord":
        if self._n != len(other):
            raise ValueError("length mismatch")
        return BitWord(self._v ^ other._v, self._n)

    __add__ = __xor__  # addition over GF(2)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitWord)
            and self._n == other._n
            and self._v == other._v
        )

    def __hash__(self) -> int:
        return hash((self._v, self._n))

    def __repr__(self) -> str:
        return f"BitWord('{self.to01()}')"

    def to01(self) -> str:
        return "".join("1" if (self._v >> i) & 1 else "0" for i in range(self._n))

    def support(self) -> tuple[int, ...]:
        """Indices of the nonzero coordinates, ascending."""
        out = []
        v = self._v
        while v:
            out.append((v & -v).bit_length() - 1)
            v &= v - 1
        return tuple(out)

    def concat(self, other: "BitWord") -> "BitWord":
        return BitWord(self._v | (other._v << self._n), self._n + len(other))

    def complement(self) -> "BitWord":
        return BitWord(self._v ^ ((1 << self._n) - 1), self._n)

    def to_array(self) -> np.ndarray:
        """The word as a uint8 array, coordinate 0 first."""
        if self._n == 0:
            return np.zeros(0, dtype=np.uint8)
        raw = self._v.to_bytes((self._n + 7) // 8, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return bits[: self._n]


@dataclass(frozen=True)
class Solution:
    """Outcome of solving u * M = y for u.

    ``status`` is "unique" (``vector`` holds the solution), "inconsistent"
    (y is outside the row space), or "underdetermined" (consistent but
    rank-deficient; ``free_count`` gives the number of free variables).
    """

    status: str
    vector: BitWord | None = None
    free_count: int | None = None

    @property
    def is_unique(self) -> bool:
        return self.status == "unique"


@lru_cache(maxsize=1024)
def _row_basis(rows: tuple[int, ...]) -> dict[int, tuple[int, int]]:
    """Triangular basis of the row space keyed by leading bit.

    Each entry maps a leading bit position to ``(vector, coefficients)``
    where ``vector = coefficients * M`` with coefficient bit i selecting
    row i.  Shared by rank and solve so repeated solves against the same
    matrix (the decoder hot path) reduce to a single back-substitution.
    """
    basis: dict[int, tuple[int, int]] = {}
    for i, row in enumerate(rows):
        vec, coeff = row, 1 << i
        while vec:
            lead = vec.bit_length() - 1
            hit = basis.get(lead)
            if hit is None:
                basis[lead] = (vec, coeff)
                break
            vec ^= hit[0]
            coeff ^= hit[1]
    return basis


class BinaryMatrix:
    """Immutable GF(2) matrix with integer-packed rows."""

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Iterable[int | BitWord], ncols: int):
        if ncols < 0:
            raise ValueError("ncols must be nonnegative")
        packed = []
        for r in rows:
            v = r.value if isinstance(r, BitWord) else int(r)
            if v < 0 or v >> ncols:
                raise ValueError("row does not fit in the column count")
            packed.append(v)
        self._rows = tuple(packed)
        self._ncols = ncols

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BinaryMatrix":
        if not rows:
            raise ValueError("cannot infer column count from no rows")
        ncols = len(rows[0])
        return cls([BitWord.from_string(r) for r in rows], ncols)

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls([1 << i for i in range(n)], n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BinaryMatrix":
        return cls([0] * nrows, ncols)

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def row_values(self) -> tuple[int, ...]:
        return self._rows

    def row(self, i: int) -> BitWord:
        return BitWord(self._rows[i], self._ncols)

    def entry(self, i: int, j: int) -> int:
        if not 0 <= j < self._ncols:
            raise IndexError("column out of range")
        return (self._rows[i] >> j) & 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinaryMatrix)
            and self._ncols == other._ncols
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self._rows, self._ncols))

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.nrows}x{self.ncols})"

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.nrows, self.ncols), dtype=np.uint8)
        for i in range(self.nrows):
            out[i] = self.row(i).to_array()
        return out

    def rank(self) -> int:
        return len(_row_basis(self._rows))

    def rank_of_columns(self, cols: Iterable[int]) -> int:
        """Rank of the submatrix on ``cols`` without extracting it.

        Zeroing the unselected columns leaves the row space isomorphic to
        the submatrix row space, so the rank is unchanged; this skips the
        per-bit gather that column_submatrix performs.
        """
        mask = 0
        for c in set(cols):
            if not 0 <= c < self._ncols:
                raise ValueError("column index out of range")
            mask |= 1 << c
        return len(_row_basis(tuple(r & mask for r in self._rows)))

    def rref(self) -> tuple["BinaryMatrix", tuple[int, ...]]:
        """Reduced row-echelon form and its pivot columns.

        Pivot columns are strictly increasing and each contains a single 1.
        The row space is preserved.
        """
        rows = list(self._rows)
        pivots = []
        pr = 0
        for c in range(self._ncols):
            mask = 1 << c
            j = next((i for i in range(pr, len(rows)) if rows[i] & mask), -1)
            if j < 0:
                continue
            rows[pr], rows[j] = rows[j], rows[pr]
            for i in range(len(rows)):
                if i != pr and rows[i] & mask:
                    rows[i] ^= rows[pr]
            pivots.append(c)
            pr += 1
            if pr == len(rows):
                break
        return BinaryMatrix(rows, self._ncols), tuple(pivots)

    def column_submatrix(self, cols: Iterable[int]) -> "BinaryMatrix":
        """Submatrix on the given column set, output columns ascending."""
        sel = sorted(set(int(c) for c in cols))
        if sel and not (0 <= sel[0] and sel[-1] < self._ncols):
            raise ValueError("column index out of range")
        out = []
        for r in self._rows:
            v = 0
            for k, c in enumerate(sel):
                v |= ((r >> c) & 1) << k
            out.append(v)
        return BinaryMatrix(out, len(sel))

    def transpose(self) -> "BinaryMatrix":
        out = []
        for j in range(self._ncols):
            v = 0
            for i, r in enumerate(self._rows):
                v |= ((r >> j) & 1) << i
            out.append(v)
        return BinaryMatrix(out, self.nrows)

    def stack(self, other: "BinaryMatrix") -> "BinaryMatrix":
        if self._ncols != other._ncols:
            raise ValueError("column count mismatch")
        return BinaryMatrix(self._rows + other._rows, self._ncols)

    def vecmat(self, u: BitWord) -> BitWord:
        """Row combination u * M."""
        if len(u) != self.nrows:
            raise ValueError("vector length must equal the row count")
        acc = 0
        uv = u.value
        while uv:
            acc ^= self._rows[(uv & -uv).bit_length() - 1]
            uv &= uv - 1
        return BitWord(acc, self._ncols)

    def solve_right(self, y: BitWord) -> Solution:
        """Solve u * M = y for the row-combination vector u."""
        if len(y) != self._ncols:
            raise ValueError("target length must equal the column count")
        basis = _row_basis(self._rows)
        yv, coeff = y.value, 0
        while yv:
            hit = basis.get(yv.bit_length() - 1)
            if hit is None:
                return Solution("inconsistent")
            yv ^= hit[0]
            coeff ^= hit[1]
        rank = len(basis)
        if rank == self.nrows:
            return Solution("unique", vector=BitWord(coeff, self.nrows))
        return Solution("underdetermined", free_count=self.nrows - rank)
