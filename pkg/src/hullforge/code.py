"""Linear codes over GF(2): duality, hull, distance, cosets, covering radius.

A LinearCode wraps a full-rank generator matrix.  Derived data (dual,
hull report, weight distribution) is computed on first request and
cached; all cached values are immutable, so a warm cache never changes
an answer.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterator, Mapping, Sequence

from . import gf2
from .errors import (
    DimensionError,
    InvalidCodeError,
    NoRankGainError,
    ResourceLimitError,
)
from .gf2 import BitMatrix, BitVector

__all__ = [
    "LinearCode",
    "HullReport",
    "WeightDistribution",
    "CosetWeightProfile",
    "from_generator",
    "DEFAULT_MAX_K",
    "SYNDROME_CAP",
]

DEFAULT_MAX_K = 28
SYNDROME_CAP = 24
_MAX_K_ENV = "HULLFORGE_MAX_K"


def enumeration_cap() -> int:
    """Message-enumeration cap; override with HULLFORGE_MAX_K."""
    raw = os.environ.get(_MAX_K_ENV)
    if raw is None:
        return DEFAULT_MAX_K
    try:
        return int(raw)
    except ValueError:
        raise ResourceLimitError(f"bad {_MAX_K_ENV} value: {raw!r}")


def _check_enum(k: int) -> None:
    cap = enumeration_cap()
    if k > cap:
        raise ResourceLimitError(
            f"enumeration over 2^{k} codewords exceeds cap k <= {cap}", limit=cap
        )


@dataclass(frozen=True)
class HullReport:
    h: int
    basis: BitMatrix
    is_lcd: bool
    is_self_orthogonal: bool
    is_self_dual: bool


@dataclass(frozen=True)
class WeightDistribution:
    """Sparse weight enumerator: only weights that occur are listed."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_mapping(cls, m: Mapping[int, int]) -> "WeightDistribution":
        return cls(tuple(sorted((w, c) for w, c in m.items() if c)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def __getitem__(self, w: int) -> int:
        return self.as_dict().get(w, 0)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    @property
    def min_positive_weight(self) -> int:
        for w, _ in self.counts:
            if w > 0:
                return w
        raise InvalidCodeError("no nonzero codeword")

    def __str__(self) -> str:
        return "[" + ", ".join(f"<{w}, {c}>" for w, c in self.counts) + "]"


@dataclass(frozen=True)
class CosetWeightProfile:
    x: BitVector
    min_weight: int
    leader: BitVector


def _gray_weight_counts(rows: Sequence[int], n: int) -> list[int]:
    # one XOR per message via the Gray sequence
    counts = [0] * (n + 1)
    counts[0] = 1
    cw = 0
    prev = 0
    for m in range(1, 1 << len(rows)):
        g = m ^ (m >> 1)
        cw ^= rows[(g ^ prev).bit_length() - 1]
        prev = g
        counts[cw.bit_count()] += 1
    return counts


class LinearCode:
    """An [n, k] binary linear code held by a full-rank generator matrix."""

    def __init__(self, gen: BitMatrix, *, repaired: bool = False):
        rows = []
        span = gf2._Span()
        for b in gen.row_bits:
            if span.add(b):
                rows.append(b)
        if not rows:
            raise InvalidCodeError("generator has rank 0")
        if len(rows) != gen.nrows:
            repaired = True
            gen = BitMatrix(gen.ncols, tuple(rows))
        self.gen = gen
        self.n = gen.ncols
        self.k = gen.nrows
        self.repaired = repaired

    # --- construction helpers -------------------------------------------

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "LinearCode":
        return cls(BitMatrix.from_strings(rows))

    def __repr__(self) -> str:
        return f"LinearCode[{self.n},{self.k}]"

    def canonical_gen(self) -> BitMatrix:
        """Unique reduced-echelon generator; equal iff same code."""
        return gf2.row_basis(self.gen)

    def same_row_space(self, other: "LinearCode") -> bool:
        return (self.n, self.k) == (other.n, other.k) and (
            self.canonical_gen() == other.canonical_gen()
        )

    def contains(self, v: BitVector) -> bool:
        return gf2.in_row_space(self.gen, v)

    # --- duality and hull -----------------------------------------------

    @cached_property
    def _dual_code(self) -> "LinearCode":
        if self.k == self.n:
            raise InvalidCodeError("full-space code has a 0-dimensional dual")
        return LinearCode(gf2.nullspace_basis(self.gen))

    def dual(self) -> "LinearCode":
        return self._dual_code

    def parity_check(self) -> BitMatrix:
        return self.dual().gen

    @cached_property
    def _hull_report(self) -> HullReport:
        h_product = self.k - gf2.rank(gf2.gram(self.gen))
        if self.k == self.n:
            # dual is {0}; the intersection is empty
            basis = BitMatrix(self.n, ())
        else:
            basis = gf2.row_space_intersection(self.gen, self.dual().gen)
        assert basis.nrows == h_product, (
            f"hull disagreement: product rank gives {h_product}, "
            f"intersection gives {basis.nrows}"
        )
        h = h_product
        return HullReport(
            h=h,
            basis=basis,
            is_lcd=h == 0,
            is_self_orthogonal=h == self.k,
            is_self_dual=h == self.k and self.n == 2 * self.k,
        )

    def hull(self) -> HullReport:
        return self._hull_report

    def hull_dim(self) -> int:
        return self.hull().h

    # --- enumeration-backed quantities ------------------------------------

    def iter_codewords(self) -> Iterator[int]:
        """All 2^k codewords as packed ints, Gray order, starting at 0."""
        rows = self.gen.row_bits
        cw = 0
        prev = 0
        yield 0
        for m in range(1, 1 << self.k):
            g = m ^ (m >> 1)
            cw ^= rows[(g ^ prev).bit_length() - 1]
            prev = g
            yield cw

    @cached_property
    def _weight_distribution(self) -> WeightDistribution:
        _check_enum(self.k)
        counts = _gray_weight_counts(self.gen.row_bits, self.n)
        return WeightDistribution.from_mapping(
            {w: c for w, c in enumerate(counts) if c}
        )

    def weight_distribution(self) -> WeightDistribution:
        return self._weight_distribution

    def min_distance(self) -> int:
        return self.weight_distribution().min_positive_weight

    def coset_min_weight(self, x: BitVector) -> CosetWeightProfile:
        if x.len != self.n:
            raise DimensionError("coset representative has wrong length")
        _check_enum(self.k)
        best = None
        leader = 0
        for cw in self.iter_codewords():
            w = (x.bits ^ cw).bit_count()
            if best is None or w < best:
                best = w
                leader = x.bits ^ cw
                if best == 0:
                    break
        return CosetWeightProfile(
            x=x, min_weight=best, leader=BitVector(self.n, leader)
        )

    def covering_radius(self, *, cap: int = SYNDROME_CAP) -> int:
        """Largest coset-leader weight, filled in by syndrome table."""
        r = self.n - self.k
        if r == 0:
            return 0
        if r > cap:
            raise ResourceLimitError(
                f"syndrome table of 2^{r} entries exceeds cap n-k <= {cap}",
                limit=cap,
            )
        hmat = self.parity_check()
        col_syn = []
        for j in range(self.n):
            s = 0
            for i, row in enumerate(hmat.row_bits):
                s |= (row >> j & 1) << i
            col_syn.append(s)
        total = 1 << r
        seen = bytearray(total)
        seen[0] = 1
        remaining = total - 1
        radius = 0
        for w in range(1, self.n + 1):
            if remaining == 0:
                break
            for cols in combinations(range(self.n), w):
                s = 0
                for j in cols:
                    s ^= col_syn[j]
                if not seen[s]:
                    seen[s] = 1
                    remaining -= 1
                    radius = w
                    if remaining == 0:
                        break
        assert remaining == 0
        return radius

    # --- lengthening by one coordinate ------------------------------------

    def augment(self, v: BitVector) -> "LinearCode":
        """[n+1, k+1] code spanned by (1 | v) and (0 | row) for each row.

        The new coordinate sits in front.  v must lie outside the code;
        a coset leader of large weight is the useful choice.
        """
        if v.len != self.n:
            raise DimensionError("augmenting vector has wrong length")
        if self.contains(v):
            raise NoRankGainError("vector already lies in the code")
        rows = [1 | (v.bits << 1)]
        rows += [b << 1 for b in self.gen.row_bits]
        return LinearCode(BitMatrix(self.n + 1, tuple(rows)))


def from_generator(rows: BitMatrix) -> LinearCode:
    """Build a code from a (possibly rank-deficient) generator matrix."""
    if rows.nrows == 0:
        raise InvalidCodeError("empty generator")
    return LinearCode(rows)
