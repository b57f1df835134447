"""Entanglement-assisted quantum code parameters from classical hulls.

A classical [n, k] code whose hull has dimension h yields the parameter
sets [[n, k-h, d; n-k-h]] and [[n, n-k-h, d'; k-h]], where d and d' are
the distances of the code and its dual.  This module is bookkeeping for
those parameter sets and the quantum Singleton bound; it does not build
encoders.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .code import LinearCode
from .corpus import TableCell
from .errors import UsageError

__all__ = [
    "EaqeccParams",
    "DerivationPair",
    "QuantumCell",
    "QuantumTable",
    "derive",
    "singleton_gap",
    "tabulate",
    "quantum_table_from_cells",
    "format_quantum_table",
]


@dataclass(frozen=True)
class EaqeccParams:
    """[[n, k, d; c]]: k logical qubits in n physical ones, c ebits.

    A degenerate set has k = 0 and no real quantum distance; d then
    records the underlying classical distance so that tables can still
    print the column, and the flag marks it as bookkeeping only.
    """

    n: int
    k: int
    d: int
    c: int
    is_mds: bool = field(default=None)  # type: ignore[assignment]
    degenerate: bool = False

    def __post_init__(self):
        if self.k < 0:
            raise UsageError(f"negative logical dimension {self.k}")
        if self.d < 1:
            raise UsageError(f"distance must be positive, got {self.d}")
        if not 0 <= self.c <= self.n - 1:
            raise UsageError(f"ebit count {self.c} outside [0, {self.n - 1}]")
        if self.degenerate and self.k != 0:
            raise UsageError("degenerate parameter sets have k = 0")
        mds = singleton_gap(self) == 0
        if self.is_mds is None:
            object.__setattr__(self, "is_mds", mds)
        elif self.is_mds != mds:
            raise UsageError(f"is_mds={self.is_mds} contradicts the Singleton gap")

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.d};{self.c}]]"


@dataclass(frozen=True)
class DerivationPair:
    """Primal and role-swapped parameter sets from one classical code.

    The ebit count of one side is the logical dimension of the other.
    dual_side is None exactly when the code is the full space, which
    has no dual distance; note says why.
    """

    primal: EaqeccParams
    dual_side: EaqeccParams | None
    note: str = ""

    def __post_init__(self):
        if self.dual_side is not None:
            if (
                self.primal.c != self.dual_side.k
                or self.primal.k != self.dual_side.c
            ):
                raise UsageError("primal and dual-side roles do not swap")


def singleton_gap(p: EaqeccParams) -> int:
    """Slack in n + c - k >= 2(d - 1); zero means MDS, negative means
    the parameters cannot come from a real code."""
    return p.n + p.c - p.k - 2 * (p.d - 1)


def derive(code: LinearCode) -> DerivationPair:
    """Parameter sets entitled by a classical code and its hull."""
    n, k = code.n, code.k
    h = code.hull_dim()
    d = code.min_distance()
    # the hull lies inside the dual, so h <= n - k for any real code
    assert h <= n - k or k == n
    primal = EaqeccParams(n, k - h, d, n - k - h, degenerate=(k - h == 0))
    if k == n:
        return DerivationPair(primal, None, note="full-space code has no dual")
    d_dual = code.dual().min_distance()
    dual_side = EaqeccParams(
        n, n - k - h, d_dual, k - h, degenerate=(n - k - h == 0)
    )
    return DerivationPair(primal, dual_side)


# ------------------------------------------------------------------- tables


@dataclass(frozen=True)
class QuantumCell:
    d: int
    c: int
    exact: bool = True

    def text(self) -> str:
        bound = "" if self.exact else ">="
        return f"({bound}{self.d};{self.c})"


@dataclass(frozen=True)
class QuantumTable:
    """Grid of (d; c) cells keyed by (n, logical dimension)."""

    h: int | None
    cells: Mapping[tuple[int, int], QuantumCell]

    def row(self, n: int) -> dict[int, QuantumCell]:
        return {kl: cell for (nn, kl), cell in self.cells.items() if nn == n}


def tabulate(codes: Sequence[LinearCode], h: int | None = None) -> QuantumTable:
    """Arrange a batch of same-hull codes as a (d; c) grid.

    Every code must have the declared hull dimension (or all the same
    one when none is declared).  Codes landing in the same cell keep
    the larger distance.
    """
    cells: dict[tuple[int, int], QuantumCell] = {}
    for code in codes:
        ch = code.hull_dim()
        if h is None:
            h = ch
        elif ch != h:
            raise UsageError(
                f"mixed hull dimensions: expected {h}, "
                f"[{code.n},{code.k}] has {ch}"
            )
        key = (code.n, code.k - h)
        d = code.min_distance()
        old = cells.get(key)
        if old is None or d > old.d:
            cells[key] = QuantumCell(d, code.n - code.k - h)
    return QuantumTable(h, cells)


def quantum_table_from_cells(cells: Iterable[TableCell]) -> QuantumTable:
    """Map a classical distance table through the parameter derivation.

    Each (n, k, d) cell with hull dimension h becomes a (d; n-k-h) cell
    in column k-h; zero-distance cells mark nonexistence and are
    dropped.  Bound flags carry over unchanged.
    """
    out: dict[tuple[int, int], QuantumCell] = {}
    h = None
    for cell in cells:
        if h is None:
            h = cell.h
        elif cell.h != h:
            raise UsageError(f"mixed source tables: hull {h} vs {cell.h}")
        if cell.d == 0:
            continue
        out[(cell.n, cell.k - h)] = QuantumCell(
            cell.d, cell.n - cell.k - h, cell.exact
        )
    return QuantumTable(h, out)


def format_quantum_table(table: QuantumTable, fmt: str = "text") -> str:
    """Render the grid; fmt is text, csv, or md."""
    if not table.cells:
        return ""
    ns = sorted({n for n, _ in table.cells})
    cols = range(0, max(kl for _, kl in table.cells) + 1)
    header = ["n/k"] + [str(c) for c in cols]
    body = []
    for n in ns:
        row = table.row(n)
        body.append(
            [str(n)] + [row[c].text() if c in row else "" for c in cols]
        )
    if fmt == "csv":
        return "\n".join(",".join(line) for line in [header] + body) + "\n"
    if fmt == "md":
        lines = ["| " + " | ".join(header) + " |"]
        lines.append("|" + "---|" * len(header))
        lines += ["| " + " | ".join(line) + " |" for line in body]
        return "\n".join(lines) + "\n"
    if fmt != "text":
        raise UsageError(f"unknown table format {fmt!r}")
    widths = [
        max(len(line[i]) for line in [header] + body) for i in range(len(header))
    ]
    lines = []
    for line in [header] + body:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())
    return "\n".join(lines) + "\n"
