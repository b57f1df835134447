"""Lengthening constructions: [n,k] with hull dimension l to [n+2,k+1].

Four variants, selected by the self-product of the extension vector x
and by the derived vector y (y_i = x · r_i over the generator rows):

  I   x·x = 1            child hull l+1
  II  x·x = 0, y = 0     child hull l+1
  III x·x = 0, y != 0    child hull in {l, l+1, l+2}
  IV  x·x = 0 (explicit) child hull l

Each construction prepends two coordinates and one generator row, and
carries an explicit parity-check matrix for the child.  II and III are
the same matrix shape; they are kept apart because they predict
different hull dimensions, and the dispatcher enforces the split.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from . import gf2
from .code import LinearCode
from .errors import (
    DimensionError,
    ResourceLimitError,
    WrongConstructionError,
    WrongParityError,
)
from .gf2 import BitMatrix, BitVector

__all__ = [
    "ConstructionKind",
    "ExtensionVector",
    "BuildResult",
    "DistancePrediction",
    "construct_I",
    "construct_II",
    "construct_III",
    "construct_IV",
    "construct",
    "classify_extension",
    "predict_distance",
    "admissible_distances",
]


class ConstructionKind(Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ExtensionVector:
    """x together with its self-product and the derived y and z vectors."""

    x: BitVector
    self_product: int
    y: BitVector  # y_i = x . (generator row i)
    z: BitVector  # z_j = x . (parity-check row j)

    @classmethod
    def bind(cls, c: LinearCode, x: BitVector) -> "ExtensionVector":
        if x.len != c.n:
            raise DimensionError(f"x has length {x.len}, code has length {c.n}")
        y = 0
        for i, r in enumerate(c.gen.row_bits):
            y |= gf2.parity(x.bits & r) << i
        z = 0
        zlen = c.n - c.k
        if zlen:
            for j, s in enumerate(c.parity_check().row_bits):
                z |= gf2.parity(x.bits & s) << j
        return cls(
            x=x,
            self_product=x.bits.bit_count() & 1,
            y=BitVector(c.k, y),
            z=BitVector(zlen, z),
        )


class DistancePrediction(frozenset):
    """Admissible child distances, with an optional covering-radius bracket."""

    bracket: tuple[int, int] | None

    def __new__(cls, values, bracket=None):
        self = super().__new__(cls, values)
        self.bracket = bracket
        return self


def admissible_distances(d: int, w: int, kind: ConstructionKind) -> frozenset:
    """Candidate minimum distances of the lengthened code.

    d is the seed distance, w the coset weight of x.  The result holds
    one to three values; the child distance always lands in it.
    """
    if kind in (ConstructionKind.I, ConstructionKind.IV):
        # no-top child codewords weigh wt(m) + 2(x.m), so their minimum
        # sits at d, d+1 or d+2 depending on how x meets the light
        # codewords; the top coset contributes exactly w+1
        return frozenset({min(d, w + 1), min(d + 1, w + 1), min(d + 2, w + 1)})
    if kind is ConstructionKind.II:
        return frozenset({min(d, w + 2)})
    # no-top minimum is d or d+1 (weights wt(m) + x.m), top coset w+1 or
    # w+2; the combined minimum spans two consecutive values
    return frozenset({min(d, w + 1), min(d + 1, w + 2)})


class BuildResult:
    """Child code, explicit parity check, and hull/distance bookkeeping.

    Hull facts are checked eagerly; distance facts are enumeration-backed
    and therefore computed only on first access.
    """

    def __init__(
        self,
        seed: LinearCode,
        kind: ConstructionKind,
        ext: ExtensionVector,
        child: LinearCode,
        parity_check: BitMatrix,
        predicted_hull: frozenset,
    ):
        self.seed = seed
        self.kind = kind
        self.extension = ext
        self.child = child
        self.parity_check = parity_check
        self.predicted_hull = predicted_hull
        self.actual_hull = child.hull().h
        assert self.actual_hull in predicted_hull, (
            f"construction {kind}: child hull {self.actual_hull} "
            f"outside predicted {sorted(predicted_hull)}"
        )

    @cached_property
    def coset_weight(self) -> int:
        return self.seed.coset_min_weight(self.extension.x).min_weight

    @cached_property
    def distance_prediction(self) -> frozenset:
        return admissible_distances(
            self.seed.min_distance(), self.coset_weight, self.kind
        )

    @cached_property
    def actual_distance(self) -> int:
        d = self.child.min_distance()
        assert d in self.distance_prediction, (
            f"construction {self.kind}: child distance {d} outside "
            f"predicted {sorted(self.distance_prediction)}"
        )
        return d

    def __repr__(self) -> str:
        return (
            f"BuildResult({self.kind}, [{self.child.n},{self.child.k}], "
            f"hull {self.actual_hull})"
        )


def _require_parity(ext: ExtensionVector, want: int, kind: str) -> None:
    if ext.self_product != want:
        raise WrongParityError(
            f"construction {kind} needs x·x = {want}, got {ext.self_product}"
        )


def _assemble(
    seed: LinearCode,
    ext: ExtensionVector,
    kind: ConstructionKind,
    predicted: frozenset,
) -> BuildResult:
    n, k = seed.n, seed.k
    x = ext.x.bits
    y = ext.y.bits
    z = ext.z.bits
    gen_rows = []
    h_rows = []
    if kind in (ConstructionKind.I, ConstructionKind.IV):
        gen_rows.append(1 | (x << 2))  # (1 0 | x)
        for i, r in enumerate(seed.gen.row_bits):
            yi = y >> i & 1
            gen_rows.append(yi | (yi << 1) | (r << 2))  # (y_i y_i | r_i)
        h_top = 1 | (x << 2) if kind is ConstructionKind.I else 2 | (x << 2)
        h_rows.append(h_top)  # (1 0 | x) for I, (0 1 | x) for IV
        if k < n:
            for j, s in enumerate(seed.parity_check().row_bits):
                zj = z >> j & 1
                h_rows.append(zj | (zj << 1) | (s << 2))  # (z_j z_j | s_j)
    else:
        gen_rows.append(3 | (x << 2))  # (1 1 | x)
        for i, r in enumerate(seed.gen.row_bits):
            gen_rows.append((y >> i & 1) | (r << 2))  # (y_i 0 | r_i)
        h_rows.append(3 | (x << 2))  # (1 1 | x)
        if k < n:
            for j, s in enumerate(seed.parity_check().row_bits):
                h_rows.append(((z >> j & 1) << 1) | (s << 2))  # (0 z_j | s_j)
    child = LinearCode(BitMatrix(n + 2, tuple(gen_rows)))
    assert child.k == k + 1 and not child.repaired
    return BuildResult(
        seed=seed,
        kind=kind,
        ext=ext,
        child=child,
        parity_check=BitMatrix(n + 2, tuple(h_rows)),
        predicted_hull=predicted,
    )


def construct_I(c: LinearCode, x: BitVector) -> BuildResult:
    """Odd x: child hull is exactly l+1."""
    ext = ExtensionVector.bind(c, x)
    _require_parity(ext, 1, "I")
    ell = c.hull().h
    return _assemble(c, ext, ConstructionKind.I, frozenset({ell + 1}))


def construct_II(c: LinearCode, x: BitVector) -> BuildResult:
    """Even x orthogonal to the whole code: child hull is exactly l+1."""
    ext = ExtensionVector.bind(c, x)
    _require_parity(ext, 0, "II")
    if not ext.y.is_zero():
        raise WrongConstructionError(
            "x is not orthogonal to the code (y != 0); use construction III"
        )
    ell = c.hull().h
    return _assemble(c, ext, ConstructionKind.II, frozenset({ell + 1}))


def construct_III(c: LinearCode, x: BitVector) -> BuildResult:
    """Even x not orthogonal to the code: hull moves within {l, l+1, l+2}."""
    ext = ExtensionVector.bind(c, x)
    _require_parity(ext, 0, "III")
    if ext.y.is_zero():
        raise WrongConstructionError(
            "x is orthogonal to the code (y = 0); use construction II"
        )
    ell = c.hull().h
    return _assemble(
        c, ext, ConstructionKind.III, frozenset({ell, ell + 1, ell + 2})
    )


def construct_IV(c: LinearCode, x: BitVector) -> BuildResult:
    """Even x with the alternative head column: child hull stays at l."""
    ext = ExtensionVector.bind(c, x)
    _require_parity(ext, 0, "IV")
    ell = c.hull().h
    return _assemble(c, ext, ConstructionKind.IV, frozenset({ell}))


_BUILDERS = {
    ConstructionKind.I: construct_I,
    ConstructionKind.II: construct_II,
    ConstructionKind.III: construct_III,
    ConstructionKind.IV: construct_IV,
}


def construct(c: LinearCode, x: BitVector, kind: ConstructionKind) -> BuildResult:
    return _BUILDERS[kind](c, x)


def classify_extension(c: LinearCode, x: BitVector) -> ConstructionKind:
    """Route x to the unique applicable construction among I/II/III.

    IV shares its precondition with II/III and is never auto-selected;
    ask for it explicitly.
    """
    ext = ExtensionVector.bind(c, x)
    if ext.self_product:
        return ConstructionKind.I
    return ConstructionKind.II if ext.y.is_zero() else ConstructionKind.III


def predict_distance(
    c: LinearCode, x: BitVector, kind: ConstructionKind
) -> DistancePrediction:
    """Admissible child distances for (c, x, kind), without building the child.

    When the covering radius of c is small enough to compute, the result
    also carries the bracket [min(d, w+1), rho(C)+2] that must contain
    every admissible value.
    """
    w = c.coset_min_weight(x).min_weight
    d = c.min_distance()
    values = admissible_distances(d, w, kind)
    try:
        rho = c.covering_radius()
    except ResourceLimitError:
        return DistancePrediction(values, None)
    return DistancePrediction(values, (min(d, w + 1), rho + 2))
