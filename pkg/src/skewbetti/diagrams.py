"""Shifted skew diagrams, their restrictions, and the rectangular decomposition.

A shifted skew diagram lives in the shifted plane {(i, j) : 1 <= i < j}; its
restrictions to ordered row/column label sets are plain 0/1 diagrams.  The
rectangular decomposition cuts such a diagram into empty rectangles, full
rectangles, at most one terminal pedestal, and a set of excess cells; the
counts derived from it (rectangularity, sphericality, staircase cells) drive
all the closed-form Betti computations in this package.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

Cell = tuple[int, int]

SAME_AS_ROWS = "same-as-rows"


@dataclass(frozen=True)
class StrictPartition:
    """A partition with strictly decreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.parts, self.parts[1:]):
            if a <= b:
                raise ValueError(f"parts must strictly decrease: {self.parts}")
        if self.parts and self.parts[-1] <= 0:
            raise ValueError(f"parts must be positive: {self.parts}")

    def __len__(self):
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-indexed), 0 beyond the last part."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0


@dataclass(frozen=True)
class ShiftedSkewShape:
    """Cells of lambda/mu in the shifted plane, for strict partitions."""

    lam: StrictPartition
    mu: StrictPartition
    cells: frozenset[Cell]

    def staircase_cells(self) -> set[Cell]:
        """Cells of the form (i, i+1)."""
        return {(i, j) for (i, j) in self.cells if j == i + 1}

    def row(self, i: int) -> set[int]:
        return {j for (r, j) in self.cells if r == i}


def build_shifted_skew(lam: StrictPartition | tuple[int, ...],
                       mu: StrictPartition | tuple[int, ...] = ()) -> ShiftedSkewShape:
    """Build the shifted skew diagram lambda/mu.

    Row i holds the cells (i, j) with i + mu_i < j <= i + lambda_i, where
    mu_i = 0 once mu runs out of parts.
    """
    if not isinstance(lam, StrictPartition):
        lam = StrictPartition(tuple(lam))
    if not isinstance(mu, StrictPartition):
        mu = StrictPartition(tuple(mu))
    if len(mu) > len(lam):
        raise ValueError("mu has more parts than lambda")
    for i in range(1, len(mu) + 1):
        if mu.part(i) >= lam.part(i):
            raise ValueError(f"mu not contained in lambda at row {i}: "
                             f"{mu.part(i)} >= {lam.part(i)}")
    cells = set()
    for i in range(1, len(lam) + 1):
        for j in range(i + mu.part(i) + 1, i + lam.part(i) + 1):
            cells.add((i, j))
    return ShiftedSkewShape(lam, mu, frozenset(cells))


@dataclass(frozen=True)
class Diagram:
    """A 0/1 diagram with ordered integer row and column labels.

    ``shifted`` marks diagrams of the form D_X (rows and columns carry the
    same labels, cells restricted from the shifted plane); only those get a
    meaningful staircase count in the decomposition.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    cells: frozenset[Cell]
    shifted: bool = False

    def __post_init__(self):
        for labels, name in ((self.rows, "row"), (self.cols, "column")):
            for a, b in zip(labels, labels[1:]):
                if a >= b:
                    raise ValueError(f"{name} labels must strictly increase: {labels}")
            if labels and labels[0] <= 0:
                raise ValueError(f"{name} labels must be positive: {labels}")
        rowset, colset = set(self.rows), set(self.cols)
        for (r, c) in self.cells:
            if r not in rowset or c not in colset:
                raise ValueError(f"cell {(r, c)} outside the label sets")

    def row_cells(self, r: int) -> list[int]:
        return sorted(c for (rr, c) in self.cells if rr == r)

    def col_cells(self, c: int) -> list[int]:
        return sorted(r for (r, cc) in self.cells if cc == c)

    def sub(self, rows, cols) -> "Diagram":
        """Restriction to sublabel sets, keeping the shifted flag only when
        rows and columns remain equal."""
        rows = tuple(sorted(rows))
        cols = tuple(sorted(cols))
        cells = frozenset((r, c) for (r, c) in self.cells if r in set(rows) and c in set(cols))
        return Diagram(rows, cols, cells, self.shifted and rows == cols)

    def to_json(self) -> dict:
        return {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "cells": sorted([r, c] for (r, c) in self.cells),
            "shifted": self.shifted,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Diagram":
        return cls(tuple(data["rows"]), tuple(data["cols"]),
                   frozenset((r, c) for r, c in data["cells"]), bool(data.get("shifted", False)))

    def ascii(self) -> str:
        """Plain-text rendering for debug output."""
        if not self.rows and not self.cols:
            return "(empty diagram)"
        width = max([len(str(c)) for c in self.cols] + [len(str(r)) for r in self.rows] + [1])
        out = [" " * (width + 1) + " ".join(str(c).rjust(width) for c in self.cols)]
        for r in self.rows:
            marks = ("X".rjust(width) if (r, c) in self.cells else ".".rjust(width)
                     for c in self.cols)
            out.append(str(r).rjust(width) + " " + " ".join(marks))
        return "\n".join(out)


def restrict(shape: ShiftedSkewShape, rows, cols=SAME_AS_ROWS) -> Diagram:
    """Restrict a shifted skew shape to rows X and columns Y.

    Passing ``cols=SAME_AS_ROWS`` produces the diagram D_X drawn in the
    shifted plane (rows and columns both labelled by X).
    """
    rows = tuple(sorted(rows))
    shifted = cols == SAME_AS_ROWS
    cols = rows if shifted else tuple(sorted(cols))
    rowset, colset = set(rows), set(cols)
    cells = frozenset((r, c) for (r, c) in shape.cells if r in rowset and c in colset)
    return Diagram(rows, cols, cells, shifted)


EMPTY_RECT = "empty"
FULL_RECT = "full"
PEDESTAL = "pedestal"


@dataclass(frozen=True)
class Piece:
    kind: str
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    top_cell: Cell | None = None
    neck_cell: Cell | None = None


@dataclass(frozen=True)
class RectDecomposition:
    pieces: tuple[Piece, ...]
    excess: frozenset[Cell]
    rectangularity: int
    spherical: bool
    # Staircase count for shifted diagrams; see staircase notes in
    # rectangular_decomposition.  0 for non-shifted input.
    staircase_nonexcess: int
    # Row/column labels never consumed by a piece (nonempty only when the
    # algorithm stopped at a pedestal).
    leftover_rows: tuple[int, ...] = field(default=())
    leftover_cols: tuple[int, ...] = field(default=())

    def has_empty_rect(self) -> bool:
        return any(p.kind == EMPTY_RECT for p in self.pieces)

    def pedestal(self) -> Piece | None:
        for p in self.pieces:
            if p.kind == PEDESTAL:
                return p
        return None

    def to_json(self) -> dict:
        return {
            "pieces": [
                {
                    "kind": p.kind,
                    "rows": list(p.rows),
                    "cols": list(p.cols),
                    "top_cell": list(p.top_cell) if p.top_cell else None,
                    "neck_cell": list(p.neck_cell) if p.neck_cell else None,
                }
                for p in self.pieces
            ],
            "excess": sorted([r, c] for (r, c) in self.excess),
            "rectangularity": self.rectangularity,
            "spherical": self.spherical,
            "staircase_nonexcess": self.staircase_nonexcess,
            "leftover_rows": list(self.leftover_rows),
            "leftover_cols": list(self.leftover_cols),
        }


def _initial_run(labels, is_empty) -> tuple[int, ...]:
    out = []
    for x in labels:
        if not is_empty(x):
            break
        out.append(x)
    return tuple(out)


def _final_run(labels, is_empty) -> tuple[int, ...]:
    out = []
    for x in reversed(labels):
        if not is_empty(x):
            break
        out.append(x)
    return tuple(reversed(out))


def rectangular_decomposition(d: Diagram) -> RectDecomposition:
    """Run the iterative rectangular decomposition of a diagram.

    Each iteration removes either a maximal empty rectangle (no top cell), a
    maximal full rectangle anchored at the top cell (top and neck present,
    cells below/left of it become excess), or terminates at a pedestal (top
    cell, no neck).  Inputs must be restrictions of shifted skew shapes;
    other diagrams can make the full-rectangle step unsound and are rejected.
    """
    rows = list(d.rows)
    cols = list(d.cols)
    cells = set(d.cells)
    pieces: list[Piece] = []
    excess: set[Cell] = set()
    leftover_rows: tuple[int, ...] = ()
    leftover_cols: tuple[int, ...] = ()

    row_cells = {r: {c for (rr, c) in cells if rr == r} for r in rows}
    col_cells = {c: {r for (r, cc) in cells if cc == c} for c in cols}

    while rows or cols:
        live = {(r, c) for (r, c) in cells if r in set(rows) and c in set(cols)}
        if not rows or not cols or (rows[0], cols[-1]) not in live:
            # Case 1: no top cell.  Shed the maximal initial run of empty
            # rows and final run of empty columns as one empty rectangle.
            rx = _initial_run(rows, lambda r: not (row_cells[r] & set(cols)))
            ry = _final_run(cols, lambda c: not (col_cells[c] & set(rows)))
            if not rx and not ry:
                raise ValueError("no top cell and no empty margin: "
                                 "diagram is not a shifted skew restriction")
            pieces.append(Piece(EMPTY_RECT, rx, ry))
            rows = [r for r in rows if r not in set(rx)]
            cols = [c for c in cols if c not in set(ry)]
            continue

        top = (rows[0], cols[-1])
        m_idx = max(i for i, r in enumerate(rows) if (r, cols[-1]) in live)
        n_idx = min(j for j, c in enumerate(cols) if (rows[0], c) in live)
        rx = tuple(rows[: m_idx + 1])
        ry = tuple(cols[n_idx:])
        neck = (rows[m_idx], cols[n_idx])

        if neck in live:
            # Subcase 2a: full rectangle.
            for r in rx:
                for c in ry:
                    if (r, c) not in live:
                        raise ValueError(f"rectangle at {top} is not full at {(r, c)}: "
                                         "diagram is not a shifted skew restriction")
            pieces.append(Piece(FULL_RECT, rx, ry, top_cell=top, neck_cell=neck))
        else:
            # Subcase 2b: pedestal; classify excess and stop.
            pieces.append(Piece(PEDESTAL, rx, ry, top_cell=top))

        below = {(r, c) for (r, c) in live if r not in set(rx) and c in set(ry)}
        left = {(r, c) for (r, c) in live if r in set(rx) and c not in set(ry)}
        excess |= below | left
        rows = [r for r in rows if r not in set(rx)]
        cols = [c for c in cols if c not in set(ry)]

        if pieces[-1].kind == PEDESTAL:
            stray = {(r, c) for (r, c) in live
                     if r in set(rows) and c in set(cols)} - excess
            if stray:
                raise ValueError(f"stray cells {sorted(stray)} at pedestal: "
                                 "diagram is not a shifted skew restriction")
            leftover_rows, leftover_cols = tuple(rows), tuple(cols)
            break

    rect = sum(1 for p in pieces if p.kind in (FULL_RECT, PEDESTAL))
    has_empty = any(p.kind == EMPTY_RECT for p in pieces)
    has_ped = any(p.kind == PEDESTAL for p in pieces)
    spherical = bool(pieces) and not has_empty and not has_ped

    # Staircase count for D_X diagrams, read off the shared-label walk
    # (rows and columns of D_X name the same vertices): 0 when that walk
    # finds an empty rectangle or leftover labels (contractible complex),
    # the pedestal's own staircase count when it ends in a pedestal, and 1
    # for a walk of full rectangles only (a single sphere).
    staircase = 0
    if d.shifted and cells:
        pa = pool_decomposition(d)
        staircase = pa.s_count

    return RectDecomposition(tuple(pieces), frozenset(excess), rect, spherical,
                             staircase, leftover_rows, leftover_cols)


def has_pedestal_pattern(d: Diagram) -> bool:
    """True iff the diagram contains cells c=(i,j), c'=(i',j') with i<i',
    j<j' whose southwest corner (i',j) is missing."""
    cells = d.cells
    for (i, j) in cells:
        for (i2, j2) in cells:
            if i < i2 and j < j2 and (i2, j) not in cells:
                return True
    return False


@dataclass(frozen=True)
class PoolAnalysis:
    """Decomposition of a D_X diagram over its shared label pool.

    Rows and columns of D_X name the *same* vertices, so a consumed label
    leaves both sides of the pool at once.  The resulting piece list is
    vertex-disjoint, which is what the wedge-of-spheres bookkeeping needs:
    ``contractible`` is set when an empty rectangle appears or labels are
    left unconsumed at a pedestal, otherwise the complex is an
    ``s_count``-fold wedge of (rectangularity-1)-spheres.
    """

    pieces: tuple[Piece, ...]
    excess: frozenset[Cell]
    rectangularity: int
    contractible: bool
    s_count: int


def pool_decomposition(d: Diagram) -> PoolAnalysis:
    """Rectangular decomposition of a shifted diagram D_X on one label pool."""
    if not d.shifted:
        raise ValueError("pool decomposition needs a shifted diagram (rows == cols)")
    pool = list(d.rows)
    cells = set(d.cells)
    pieces: list[Piece] = []
    excess: set[Cell] = set()
    contractible = False
    pedestal_piece = None

    while pool:
        live = {(r, c) for (r, c) in cells if r in set(pool) and c in set(pool)}
        row_has = {r: any(rr == r for (rr, _) in live) for r in pool}
        col_has = {c: any(cc == c for (_, cc) in live) for c in pool}
        top = (pool[0], pool[-1])
        if len(pool) == 1 or top not in live:
            rx = _initial_run(pool, lambda r: not row_has[r])
            ry = _final_run(pool, lambda c: not col_has[c])
            if not rx and not ry:
                raise ValueError("no top cell and no empty margin in pool step: "
                                 "diagram is not a shifted skew restriction")
            pieces.append(Piece(EMPTY_RECT, rx, ry))
            contractible = True
            pool = [z for z in pool if z not in set(rx) | set(ry)]
            continue

        m_idx = max(i for i, r in enumerate(pool) if (r, pool[-1]) in live)
        n_idx = min(j for j, c in enumerate(pool) if (pool[0], c) in live)
        rx = tuple(pool[: m_idx + 1])
        ry = tuple(pool[n_idx:])
        neck = (pool[m_idx], pool[n_idx])
        below = {(r, c) for (r, c) in live if r not in set(rx) and c in set(ry)}
        left = {(r, c) for (r, c) in live if r in set(rx) and c not in set(ry)}
        excess |= below | left

        if neck in live:
            for r in rx:
                for c in ry:
                    if (r, c) not in live:
                        raise ValueError("pool rectangle not full: "
                                         "diagram is not a shifted skew restriction")
            pieces.append(Piece(FULL_RECT, rx, ry, top_cell=top, neck_cell=neck))
            pool = [z for z in pool if z not in set(rx) | set(ry)]
        else:
            pedestal_piece = Piece(PEDESTAL, rx, ry, top_cell=top)
            pieces.append(pedestal_piece)
            leftovers = [z for z in pool if z not in set(rx) | set(ry)]
            if leftovers:
                contractible = True
            break

    rect = sum(1 for p in pieces if p.kind in (FULL_RECT, PEDESTAL))
    s = 0
    if not contractible:
        if pedestal_piece is not None:
            labels = sorted(set(pedestal_piece.rows) | set(pedestal_piece.cols))
            succ = {a: b for a, b in zip(labels, labels[1:])}
            s = sum(1 for (r, c) in d.cells
                    if r in set(pedestal_piece.rows) and c in set(pedestal_piece.cols)
                    and succ.get(r) == c)
        else:
            s = 1 if pieces else 0
    return PoolAnalysis(tuple(pieces), frozenset(excess), rect, contractible, s)


_DSL_RANGE = re.compile(r"^(\d+)\.\.(\d+)$")


def _parse_int_list(text: str) -> tuple[int, ...]:
    out: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        m = _DSL_RANGE.match(token)
        if m:
            a, b = int(m.group(1)), int(m.group(2))
            out.extend(range(a, b + 1))
        else:
            out.append(int(token))
    return tuple(out)


def parse_dsl(text: str) -> Diagram:
    """Parse the compact diagram DSL.

    Example: ``lambda=12,11,7,6,4,2,1; mu=11,9,6,3; X=2,4,5,7; Y=4,6,...``.
    Ranges like ``1..14`` are accepted in the integer lists; omitting Y
    yields the shifted diagram D_X.
    """
    fields: dict[str, str] = {}
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ValueError(f"bad DSL clause {part!r}")
        key, _, value = part.partition("=")
        fields[key.strip().lower()] = value.strip()
    if "lambda" not in fields:
        raise ValueError("DSL needs a lambda= clause")
    lam = _parse_int_list(fields["lambda"])
    mu = _parse_int_list(fields.get("mu", ""))
    shape = build_shifted_skew(lam, mu)
    max_label = (lam[0] + 1) if lam else 0  # last column the shape can touch
    rows = _parse_int_list(fields["x"]) if "x" in fields else tuple(range(1, max_label + 1))
    if "y" in fields and fields["y"].lower() not in ("x", "same", "same-as-x"):
        return restrict(shape, rows, _parse_int_list(fields["y"]))
    return restrict(shape, rows)


def diagram_from_file(path: str) -> Diagram:
    """Load a diagram from a JSON file (bare or under a "diagram" key)."""
    with open(path) as fh:
        data = json.load(fh)
    if "diagram" in data:
        data = data["diagram"]
    return Diagram.from_json(data)
