"""Bit-packed linear algebra over GF(2) for square matrices.

Rows are stored as Python integers: bit j of ``rows[i]`` holds entry
(i, j).  Arbitrary-precision ints give whole-row XOR as a single
word-parallel operation, which is what keeps the elimination loops and
the diagonal searches built on top of them fast enough in pure Python.

Matrices are immutable; every operation returns a fresh value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class MatrixFormatError(ValueError):
    """Malformed matrix text (ragged lines, illegal characters, empty)."""


@dataclass(frozen=True)
class Gf2Matrix:
    """Square matrix over GF(2) with bit-packed rows.

    ``rows[i]`` packs row i with bit j = entry (i, j).  Bits at or above
    column n must be zero.  n = 0 is legal and behaves like the empty
    matrix (rank 0, determinant 1).
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("dimension must be non-negative")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows):
            if row < 0 or row >> self.n:
                raise ValueError(f"row {i} has bits outside columns 0..{self.n - 1}")

    @classmethod
    def zero(cls, n: int) -> "Gf2Matrix":
        return cls(n, (0,) * n)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, entries: Iterable[Iterable[int]]) -> "Gf2Matrix":
        """Build from nested 0/1 entries, e.g. ``[[0, 1], [1, 0]]``."""
        packed = []
        for row in entries:
            mask = 0
            width = 0
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError(f"entry {v!r} is not a bit")
                mask |= v << j
                width = j + 1
            packed.append((mask, width))
        n = len(packed)
        for i, (_, width) in enumerate(packed):
            if width != n:
                raise ValueError(f"row {i} has {width} entries, expected {n}")
        return cls(n, tuple(mask for mask, _ in packed))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def diagonal(self) -> "DiagonalAssignment":
        """Current main-diagonal values."""
        mask = 0
        for i, row in enumerate(self.rows):
            mask |= row & (1 << i)
        return DiagonalAssignment(self.n, mask)

    def to_lists(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.n)] for row in self.rows]

    def __str__(self) -> str:
        return render_matrix(self)


@dataclass(frozen=True)
class DiagonalAssignment:
    """Length-n vector of bits destined for the main diagonal.

    Bit i of ``mask`` is the value placed at cell (i, i).
    """

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("dimension must be non-negative")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"assignment has bits outside positions 0..{self.n - 1}")

    @classmethod
    def zeros(cls, n: int) -> "DiagonalAssignment":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "DiagonalAssignment":
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "DiagonalAssignment":
        mask = 0
        count = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"value {b!r} is not a bit")
            mask |= b << i
            count = i + 1
        return cls(count, mask)

    @classmethod
    def from_string(cls, text: str) -> "DiagonalAssignment":
        if any(c not in "01" for c in text):
            raise ValueError(f"illegal character in {text!r}")
        return cls(len(text), sum(1 << i for i, c in enumerate(text) if c == "1"))

    def bit(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise ValueError(f"position {i} out of range for length {self.n}")
        return (self.mask >> i) & 1

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.mask >> i) & 1 for i in range(self.n))

    def to_string(self) -> str:
        return "".join("1" if (self.mask >> i) & 1 else "0" for i in range(self.n))

    def weight(self) -> int:
        """Number of ones; equals the rank of the corresponding diagonal matrix."""
        return self.mask.bit_count()

    def complement(self) -> "DiagonalAssignment":
        return DiagonalAssignment(self.n, self.mask ^ ((1 << self.n) - 1))

    def as_matrix(self) -> Gf2Matrix:
        """The diagonal matrix carrying these values."""
        return Gf2Matrix(self.n, tuple((self.mask & (1 << i)) for i in range(self.n)))


def rank_rows(rows: list[int], n: int, cap: int | None = None) -> int:
    """Rank of packed rows over GF(2); destroys ``rows``.

    Forward elimination over columns 0..n-1; the pivot for a column is
    the lowest-index remaining row with a 1 there.  With ``cap`` given,
    elimination stops as soon as the rank exceeds it and returns cap + 1;
    useful when only "rank <= cap?" is needed.
    """
    nrows = len(rows)
    rank = 0
    for col in range(n):
        bit = 1 << col
        pivot = -1
        for r in range(rank, nrows):
            if rows[r] & bit:
                pivot = r
                break
        if pivot < 0:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        for r in range(pivot + 1, nrows):
            if rows[r] & bit:
                rows[r] ^= prow
        rank += 1
        if rank == nrows or (cap is not None and rank > cap):
            break
    return rank


def det_rows(rows: list[int], size: int) -> int:
    """Determinant over GF(2) of the first ``size`` packed rows; destroys ``rows``.

    Returns 1 iff the rows are linearly independent, exiting early on the
    first pivot-free column.
    """
    for col in range(size):
        bit = 1 << col
        pivot = -1
        for r in range(col, size):
            if rows[r] & bit:
                pivot = r
                break
        if pivot < 0:
            return 0
        rows[col], rows[pivot] = rows[pivot], rows[col]
        prow = rows[col]
        for r in range(pivot + 1, size):
            if rows[r] & bit:
                rows[r] ^= prow
    return 1


def rank(m: Gf2Matrix) -> int:
    """GF(2) rank of ``m``; the input is not modified."""
    return rank_rows(list(m.rows), m.n)


def determinant(m: Gf2Matrix) -> int:
    """1 iff ``m`` has full rank (the empty matrix counts as full rank)."""
    return det_rows(list(m.rows), m.n)


def corner_minor(m: Gf2Matrix, size: int) -> int:
    """Determinant of the top-left ``size`` x ``size`` submatrix, 1 <= size <= n."""
    if not 1 <= size <= m.n:
        raise ValueError(f"corner size {size} out of range 1..{m.n}")
    mask = (1 << size) - 1
    return det_rows([m.rows[r] & mask for r in range(size)], size)


def add(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    """Entrywise XOR; over GF(2) this is both the sum and the difference."""
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    return Gf2Matrix(a.n, tuple(x ^ y for x, y in zip(a.rows, b.rows)))


def with_diagonal(m: Gf2Matrix, d: DiagonalAssignment) -> Gf2Matrix:
    """Copy of ``m`` with the main diagonal replaced by ``d``."""
    if m.n != d.n:
        raise ValueError(f"dimension mismatch: {m.n} vs {d.n}")
    rows = tuple(
        (row & ~(1 << i)) | (d.mask & (1 << i)) for i, row in enumerate(m.rows)
    )
    return Gf2Matrix(m.n, rows)


def parse_matrix(text: str) -> Gf2Matrix:
    """Parse the text format: n lines of exactly n characters from {0, 1}.

    CRLF line endings are tolerated; one trailing newline is optional.
    """
    normalized = text.replace("\r\n", "\n")
    if normalized.endswith("\n"):
        normalized = normalized[:-1]
    if not normalized:
        raise MatrixFormatError("empty input")
    lines = normalized.split("\n")
    n = len(lines)
    rows = []
    for i, line in enumerate(lines):
        if len(line) != n:
            raise MatrixFormatError(
                f"ragged input: line {i + 1} has {len(line)} characters, expected {n}"
            )
        mask = 0
        for j, c in enumerate(line):
            if c == "1":
                mask |= 1 << j
            elif c != "0":
                raise MatrixFormatError(f"illegal character {c!r} on line {i + 1}")
        rows.append(mask)
    return Gf2Matrix(n, tuple(rows))


def render_matrix(m: Gf2Matrix) -> str:
    """Inverse of :func:`parse_matrix`; emits LF line endings."""
    return "".join(
        "".join("1" if (row >> j) & 1 else "0" for j in range(m.n)) + "\n"
        for row in m.rows
    )
