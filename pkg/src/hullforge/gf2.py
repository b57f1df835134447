"""Word-packed exact linear algebra over GF(2).

Vectors and matrices are stored as Python integers, one bit per
coordinate, with bit i holding coordinate i (so the leftmost character
of the text form "0110.." is bit 0).  Arbitrary lengths are supported;
everything here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError

__all__ = [
    "BitVector",
    "BitMatrix",
    "dot",
    "rank",
    "rref",
    "mat_mul",
    "transpose",
    "identity",
    "zeros",
    "stack",
    "nullspace_basis",
    "row_space_intersection",
    "in_row_space",
]


# ---------------------------------------------------------------------------
# raw-integer kernels; row lists are little-endian packed ints


def bits_from01(s: str) -> int:
    """Pack a 01-string, leftmost char = coordinate 0 = bit 0."""
    v = 0
    for i, ch in enumerate(s):
        if ch == "1":
            v |= 1 << i
        elif ch != "0":
            raise ValueError(f"bad character {ch!r} in bit string")
    return v


def bits_to01(bits: int, n: int) -> str:
    return "".join("1" if bits >> i & 1 else "0" for i in range(n))


def parity(x: int) -> int:
    return x.bit_count() & 1


def _rref_ints(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form.  Returns (rows, pivot columns).

    Deterministic: columns are processed left to right, the pivot row is
    the first remaining row with a 1 in the column.  Zero rows sink to
    the bottom; the output has the same number of rows as the input.
    """
    out = list(rows)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        sel = -1
        for i in range(r, len(out)):
            if out[i] >> col & 1:
                sel = i
                break
        if sel < 0:
            continue
        out[r], out[sel] = out[sel], out[r]
        for i in range(len(out)):
            if i != r and out[i] >> col & 1:
                out[i] ^= out[r]
        pivots.append(col)
        r += 1
        if r == len(out):
            break
    return out, pivots


def _rank_ints(rows: Iterable[int]) -> int:
    # forward elimination only; order-independent result
    basis: list[int] = []
    for row in rows:
        cur = row
        for b in basis:
            low = b & -b
            if cur & low:
                cur ^= b
        if cur:
            basis.append(cur)
    return len(basis)


def _reduce_against(basis: list[int], v: int) -> int:
    """Reduce v against echelon basis rows (each with a unique low bit)."""
    for b in basis:
        low = b & -b
        if v & low:
            v ^= b
    return v


class _Span:
    """Incremental row-space tracker over packed ints."""

    def __init__(self, rows: Iterable[int] = ()):
        self.basis: list[int] = []
        for r in rows:
            self.add(r)

    def add(self, v: int) -> bool:
        v = _reduce_against(self.basis, v)
        if v == 0:
            return False
        self.basis.append(v)
        return True

    def contains(self, v: int) -> bool:
        return _reduce_against(self.basis, v) == 0

    @property
    def dim(self) -> int:
        return len(self.basis)


# ---------------------------------------------------------------------------
# value types


@dataclass(frozen=True)
class BitVector:
    """Immutable vector over GF(2); bit i of `bits` is coordinate i."""

    len: int
    bits: int

    def __post_init__(self):
        if self.len < 0:
            raise DimensionError("negative length")
        if self.bits < 0 or self.bits >> self.len:
            raise DimensionError("bits outside declared length")

    @classmethod
    def from01(cls, s: str) -> "BitVector":
        return cls(len(s), bits_from01(s))

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "BitVector":
        v = 0
        for i in support:
            if not 0 <= i < n:
                raise DimensionError(f"support index {i} out of range")
            v |= 1 << i
        return cls(n, v)

    @classmethod
    def zero(cls, n: int) -> "BitVector":
        return cls(n, 0)

    def __len__(self) -> int:
        return self.len

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.len:
            raise IndexError(i)
        return self.bits >> i & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.len != other.len:
            raise DimensionError("length mismatch")
        return BitVector(self.len, self.bits ^ other.bits)

    __add__ = __xor__

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.len) if self.bits >> i & 1)

    def is_zero(self) -> bool:
        return self.bits == 0

    def to01(self) -> str:
        return bits_to01(self.bits, self.len)

    def __str__(self) -> str:
        return self.to01()


@dataclass(frozen=True)
class BitMatrix:
    """Immutable matrix over GF(2), stored as one packed int per row."""

    ncols: int
    row_bits: tuple[int, ...]

    def __post_init__(self):
        if self.ncols < 0:
            raise DimensionError("negative column count")
        object.__setattr__(self, "row_bits", tuple(self.row_bits))
        for r in self.row_bits:
            if r < 0 or r >> self.ncols:
                raise DimensionError("row exceeds declared width")

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BitMatrix":
        if not rows:
            raise DimensionError("cannot infer width of an empty matrix")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise DimensionError("ragged rows")
        return cls(n, tuple(bits_from01(r) for r in rows))

    @classmethod
    def from_rows(cls, rows: Sequence[BitVector]) -> "BitMatrix":
        if not rows:
            raise DimensionError("cannot infer width of an empty matrix")
        n = rows[0].len
        if any(r.len != n for r in rows):
            raise DimensionError("ragged rows")
        return cls(n, tuple(r.bits for r in rows))

    @property
    def nrows(self) -> int:
        return len(self.row_bits)

    @property
    def rows(self) -> tuple[BitVector, ...]:
        return tuple(BitVector(self.ncols, b) for b in self.row_bits)

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.row_bits[i])

    def entry(self, i: int, j: int) -> int:
        if not 0 <= j < self.ncols:
            raise IndexError(j)
        return self.row_bits[i] >> j & 1

    def to_strings(self) -> list[str]:
        return [bits_to01(b, self.ncols) for b in self.row_bits]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


# ---------------------------------------------------------------------------
# operations


def dot(a: BitVector, b: BitVector) -> int:
    """Inner product: parity of the coordinatewise AND."""
    if a.len != b.len:
        raise DimensionError("length mismatch")
    return parity(a.bits & b.bits)


def rank(m: BitMatrix) -> int:
    return _rank_ints(m.row_bits)


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form plus pivot columns.  Shape-preserving."""
    rows, pivots = _rref_ints(m.row_bits, m.ncols)
    return BitMatrix(m.ncols, tuple(rows)), pivots


def row_basis(m: BitMatrix) -> BitMatrix:
    """RREF with zero rows dropped: the canonical basis of the row space."""
    rows, pivots = _rref_ints(m.row_bits, m.ncols)
    return BitMatrix(m.ncols, tuple(rows[: len(pivots)]))


def transpose(m: BitMatrix) -> BitMatrix:
    cols = []
    for j in range(m.ncols):
        v = 0
        for i, row in enumerate(m.row_bits):
            v |= (row >> j & 1) << i
        cols.append(v)
    return BitMatrix(m.nrows, tuple(cols))


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product; row i of the result is the GF(2) combination of
    b's rows selected by row i of a."""
    if a.ncols != b.nrows:
        raise DimensionError(f"inner dimensions differ: {a.ncols} vs {b.nrows}")
    out = []
    for sel in a.row_bits:
        acc = 0
        x = sel
        while x:
            i = (x & -x).bit_length() - 1
            acc ^= b.row_bits[i]
            x &= x - 1
        out.append(acc)
    return BitMatrix(b.ncols, tuple(out))


def gram(m: BitMatrix) -> BitMatrix:
    """m · m^T without materializing the transpose."""
    out = []
    for a in m.row_bits:
        v = 0
        for j, b in enumerate(m.row_bits):
            v |= parity(a & b) << j
        out.append(v)
    return BitMatrix(m.nrows, tuple(out))


def identity(n: int) -> BitMatrix:
    return BitMatrix(n, tuple(1 << i for i in range(n)))


def zeros(nrows: int, ncols: int) -> BitMatrix:
    return BitMatrix(ncols, (0,) * nrows)


def stack(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.ncols != b.ncols:
        raise DimensionError("width mismatch")
    return BitMatrix(a.ncols, a.row_bits + b.row_bits)


def nullspace_basis(m: BitMatrix) -> BitMatrix:
    """Basis of the right nullspace: m · result^T = 0.

    Rows are emitted in order of the free column they are built from,
    so the result is deterministic.  An empty constraint set yields the
    identity; a full-rank square matrix yields a 0×n result.
    """
    n = m.ncols
    rows, pivots = _rref_ints(m.row_bits, n)
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = 1 << f
        for r, p in enumerate(pivots):
            if rows[r] >> f & 1:
                v |= 1 << p
        basis.append(v)
    return BitMatrix(n, tuple(basis))


def row_space_intersection(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Basis of rowspace(a) ∩ rowspace(b) by the Zassenhaus construction.

    Stack (u | u) for u in a over (v | 0) for v in b and row-reduce; the
    right halves of the rows whose left half vanished span exactly the
    intersection.
    """
    if a.ncols != b.ncols:
        raise DimensionError("width mismatch")
    n = a.ncols
    rows = [u | (u << n) for u in a.row_bits]
    rows += list(b.row_bits)
    reduced, pivots = _rref_ints(rows, 2 * n)
    mask = (1 << n) - 1
    out = []
    for r in reduced[: len(pivots)]:
        if r & mask == 0:
            out.append(r >> n)
    # re-reduce the extracted halves so the basis is canonical
    reduced2, pivots2 = _rref_ints(out, n)
    return BitMatrix(n, tuple(reduced2[: len(pivots2)]))


def in_row_space(m: BitMatrix, v: BitVector) -> bool:
    if v.len != m.ncols:
        raise DimensionError("length mismatch")
    return _Span(m.row_bits).contains(v.bits)
