"""Bound checks for bipartite edge ideals and the colex lower bound.

Classifies bipartite graphs (row-nested, nearly row-nested, horizontal,
horizontal-vertical) both by definition and by forbidden induced
subdiagrams, evaluates the conjectured lower/upper Betti bounds against the
homology oracle with equality diagnostics, verifies the full-column and
nested-row reduction identities, checks the colex lower bound, and
enumerates small bipartite graphs up to isomorphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .hypergraphs import UniformFamily, colex_closed_form
from .simplicial import (BipartiteGraph, OracleSizeError,
                         hochster_betti_table, x_vertex, y_vertex)


# ---------------------------------------------------------------------------
# Classification


@dataclass
class GraphClassReport:
    row_nested: bool
    nearly_row_nested: bool
    horizontal: bool
    horizontal_vertical: bool
    method: str
    forbidden_witnesses: dict[str, tuple] = field(default_factory=dict)

    def flags(self) -> dict[str, bool]:
        return {
            "row_nested": self.row_nested,
            "nearly_row_nested": self.nearly_row_nested,
            "horizontal": self.horizontal,
            "horizontal_vertical": self.horizontal_vertical,
        }


def classify_bipartite(g: BipartiteGraph, method: str = "definition") -> GraphClassReport:
    """Classify a bipartite graph into the four bound-related classes.

    ``definition`` applies the row-set conditions directly; ``forbidden``
    scans for the corresponding induced subdiagram obstructions.  The two
    methods agree; the forbidden scan also reports witnesses.
    """
    if method == "definition":
        return _classify_by_definition(g)
    if method == "forbidden":
        return _classify_by_forbidden(g)
    raise ValueError(f"unknown method {method!r}")


def _classify_by_definition(g: BipartiteGraph) -> GraphClassReport:
    rows = {x: g.row(x) for x in g.xs}
    row_nested = True
    nearly = True
    for a, b in itertools.combinations(g.xs, 2):
        ra, rb = rows[a], rows[b]
        small, large = (ra, rb) if len(ra) <= len(rb) else (rb, ra)
        if not small <= large:
            row_nested = False
            if len(ra) != len(rb):
                nearly = False
    if nearly:
        by_size: dict[int, list] = {}
        for x in g.xs:
            by_size.setdefault(len(rows[x]), []).append(x)
        for c, xs in by_size.items():
            if c == 0:
                continue
            common = set.intersection(*(rows[x] for x in xs))
            if len(common) not in (c - 1, c):
                nearly = False
    horizontal = all(len(g.col(y)) <= 1 for y in g.ys)
    hv = all(len(g.col(y)) <= 1 or len(g.row(x)) <= 1 for (x, y) in g.edges)
    return GraphClassReport(row_nested, nearly, horizontal, hv, "definition")


def _classify_by_forbidden(g: BipartiteGraph) -> GraphClassReport:
    cells = g.edges
    witnesses: dict[str, tuple] = {}

    def induced(xs, ys):
        return {(x, y) for (x, y) in cells if x in xs and y in ys}

    row_nested = True
    for xs in itertools.combinations(g.xs, 2):
        for ys in itertools.combinations(g.ys, 2):
            sub = induced(set(xs), set(ys))
            if len(sub) == 2 and len({x for x, _ in sub}) == 2 \
                    and len({y for _, y in sub}) == 2:
                row_nested = False
                witnesses.setdefault("row_nested", (xs, ys))
    nearly = True
    for xs in itertools.combinations(g.xs, 2):
        for ys in itertools.combinations(g.ys, 3):
            sub = induced(set(xs), set(ys))
            if len(sub) != 3:
                continue
            per_row = {x: {y for (xx, y) in sub if xx == x} for x in xs}
            sizes = sorted(len(v) for v in per_row.values())
            if sizes == [1, 2] and not any(
                    per_row[xs[0]] & per_row[xs[1]]):
                nearly = False
                witnesses.setdefault("nearly_row_nested", (xs, ys))
    if nearly:
        for xs in itertools.combinations(g.xs, 3):
            for ys in itertools.combinations(g.ys, 3):
                sub = induced(set(xs), set(ys))
                if len(sub) != 6:
                    continue
                if all(len({y for (xx, y) in sub if xx == x}) == 2 for x in xs) and \
                        all(len({xx for (xx, y) in sub if y == yy}) == 2 for yy in ys):
                    nearly = False
                    witnesses.setdefault("nearly_row_nested", (xs, ys))
                    break
            if not nearly:
                break
    horizontal = True
    for y in g.ys:
        col = g.col(y)
        if len(col) >= 2:
            horizontal = False
            witnesses.setdefault("horizontal", (tuple(sorted(col))[:2], (y,)))
            break
    hv = True
    for xs in itertools.combinations(g.xs, 2):
        for ys in itertools.combinations(g.ys, 2):
            sub = induced(set(xs), set(ys))
            if len(sub) >= 3:
                hv = False
                witnesses.setdefault("horizontal_vertical", (xs, ys))
                break
        if not hv:
            break
    return GraphClassReport(row_nested, nearly, horizontal, hv, "forbidden", witnesses)


def bipartite_models(g: BipartiteGraph) -> dict[str, BipartiteGraph]:
    """The row-nested model R_G and the horizontal model H_G of a graph,
    both preserving the X-degree sequence."""
    degs = {x: g.degree(x) for x in g.xs}
    width = max(degs.values(), default=0)
    r_edges = {(x, j) for x in g.xs for j in range(1, degs[x] + 1)}
    r_g = BipartiteGraph(g.xs, tuple(range(1, width + 1)) if width else (),
                         frozenset(r_edges))
    h_edges = set()
    offset = 0
    for x in g.xs:
        for j in range(1, degs[x] + 1):
            h_edges.add((x, offset + j))
        offset += degs[x]
    h_g = BipartiteGraph(g.xs, tuple(range(1, offset + 1)) if offset else (),
                         frozenset(h_edges))
    return {"R_G": r_g, "H_G": h_g}


# ---------------------------------------------------------------------------
# The bipartite bound conjecture


def lower_bound_value(g: BipartiteGraph, i: int, xset) -> int:
    xset = set(xset)
    if not xset:
        return 0
    if len(xset) >= i + 2:
        return 0
    mindeg = min(g.degree(x) for x in xset)
    return comb(mindeg, i - len(xset) + 2)


def upper_bound_binomial(g: BipartiteGraph, i: int, xset) -> int:
    """All (i+1)-subsets of the edges at X'; valid but not attained by the
    horizontal model when a subset can miss a row of X'."""
    total = sum(g.degree(x) for x in xset)
    return comb(total, i + 1)


def upper_bound_value(g: BipartiteGraph, i: int, xset) -> int:
    """beta_{i,X',*} of the horizontal model: the number of (i+1)-subsets
    of its edges whose row support is exactly X', i.e. the t^(i+1)
    coefficient of prod_{x in X'} ((1+t)^deg(x) - 1)."""
    poly = [1]
    for x in xset:
        d = g.degree(x)
        factor = [0] + [comb(d, k) for k in range(1, d + 1)]
        out = [0] * (len(poly) + d)
        for a, pa in enumerate(poly):
            if pa:
                for b, fb in enumerate(factor):
                    out[a + b] += pa * fb
        poly = out
    return poly[i + 1] if i + 1 < len(poly) else 0


@dataclass
class ConjectureEntry:
    i: int
    xset: tuple
    lower: int
    upper: int
    upper_binomial: int
    values: dict[str, int]


@dataclass
class ConjectureReport:
    entries: list[ConjectureEntry]
    lower_ok: bool
    upper_ok: bool
    lower_tight_all: bool
    upper_tight_all: bool
    fields: tuple[str, ...]
    classification: GraphClassReport
    fields_agree: bool

    def verdicts(self) -> dict[str, bool]:
        return {
            "lower_ok": self.lower_ok,
            "upper_ok": self.upper_ok,
            "lower_tight_all": self.lower_tight_all,
            "upper_tight_all": self.upper_tight_all,
        }


def x_bullet_tables(g: BipartiteGraph, primes=(2,), max_vertices: int | None = 12):
    """beta_{i, X', *} per field, as {field: {(i, X'): value}}."""
    supports = [frozenset({x_vertex(x), y_vertex(y)}) for (x, y) in g.edges]
    if not supports:
        return {f: {} for f in ["Q"] + [f"F{p}" for p in primes]}
    tables = hochster_betti_table(supports, g.vertices(), primes=primes,
                                  max_vertices=max_vertices)
    out = {}
    for fld, table in tables.items():
        agg: dict[tuple[int, tuple], int] = {}
        for (i, support), v in table.entries.items():
            xpart = tuple(sorted(lbl for (tag, lbl) in support if tag == "x"))
            agg[(i, xpart)] = agg.get((i, xpart), 0) + v
        out[fld] = agg
    return out


def check_bipartite_conjecture(g: BipartiteGraph, primes=(2,),
                               max_vertices: int | None = 12) -> ConjectureReport:
    """Evaluate the lower/upper bound inequalities for every (i, X').

    Values come from the homology oracle per field; tightness-for-all is
    compared against the nearly-row-nested / horizontal-vertical
    classification by the caller or the tests.
    """
    nverts = len(g.xs) + len(g.ys)
    if max_vertices is not None and nverts > max_vertices:
        raise OracleSizeError(f"{nverts} vertices exceeds the oracle limit")
    aggs = x_bullet_tables(g, primes, max_vertices)
    fields = tuple(aggs)
    imax = nverts
    entries = []
    lower_ok = upper_ok = lower_tight = upper_tight = True
    fields_agree = True
    for r in range(len(g.xs) + 1):
        for xs in itertools.combinations(g.xs, r):
            for i in range(imax + 1):
                lo = lower_bound_value(g, i, xs)
                hi = upper_bound_value(g, i, xs)
                hib = upper_bound_binomial(g, i, xs)
                values = {fld: aggs[fld].get((i, xs), 0) for fld in fields}
                if lo or hi or any(values.values()):
                    entries.append(ConjectureEntry(i, xs, lo, hi, hib, values))
                if len(set(values.values())) > 1:
                    fields_agree = False
                for v in values.values():
                    lower_ok &= v >= lo
                    upper_ok &= v <= hi <= hib
                    lower_tight &= v == lo
                    upper_tight &= v == hi
    cls = classify_bipartite(g)
    return ConjectureReport(entries, lower_ok, upper_ok, lower_tight,
                            upper_tight, fields, cls, fields_agree)


# ---------------------------------------------------------------------------
# Reduction identities


@dataclass
class ReductionReport:
    kind: str
    detail: tuple
    holds: bool
    checked: int


def full_column_reduction(g: BipartiteGraph, y, primes=(2,)) -> ReductionReport:
    """Oracle check of the removal identity for a full column y:
    beta_{i,X',*}(G) = [i = |X'|-1] + beta_{i,X',*}(G-y) + beta_{i-1,X',*}(G-y)."""
    if g.col(y) != set(g.xs) or not g.xs:
        raise ValueError(f"column {y} is not full")
    reduced = BipartiteGraph(g.xs, tuple(c for c in g.ys if c != y),
                             frozenset(e for e in g.edges if e[1] != y))
    big = x_bullet_tables(g, primes)
    small = x_bullet_tables(reduced, primes) if reduced.edges else \
        {fld: {} for fld in big}
    holds = True
    checked = 0
    imax = len(g.xs) + len(g.ys)
    for fld in big:
        for r in range(len(g.xs) + 1):
            for xs in itertools.combinations(g.xs, r):
                for i in range(imax + 1):
                    lhs = big[fld].get((i, xs), 0)
                    rhs = (1 if (xs and i == len(xs) - 1) else 0) \
                        + small[fld].get((i, xs), 0) \
                        + (small[fld].get((i - 1, xs), 0) if i >= 1 else 0)
                    checked += 1
                    if lhs != rhs:
                        holds = False
    return ReductionReport("full_column", (y,), holds, checked)


def nested_row_reduction(g: BipartiteGraph, x1, x2, primes=(2,)) -> ReductionReport:
    """Oracle check of beta_{i,X,*}(G) = beta_{i-1,X-{x1},*}(G-x1) when
    R_{x2} is contained in R_{x1}."""
    if x1 == x2 or not g.row(x2) <= g.row(x1):
        raise ValueError(f"rows {x2} inside {x1} required")
    reduced = BipartiteGraph(tuple(x for x in g.xs if x != x1), g.ys,
                             frozenset(e for e in g.edges if e[0] != x1))
    big = x_bullet_tables(g, primes)
    small = x_bullet_tables(reduced, primes) if reduced.edges else \
        {fld: {} for fld in big}
    full_x = tuple(g.xs)
    rest_x = tuple(x for x in g.xs if x != x1)
    holds = True
    checked = 0
    for fld in big:
        for i in range(len(g.xs) + len(g.ys) + 1):
            lhs = big[fld].get((i, full_x), 0)
            rhs = small[fld].get((i - 1, rest_x), 0) if i >= 1 else 0
            checked += 1
            if lhs != rhs:
                holds = False
    return ReductionReport("nested_rows", (x1, x2), holds, checked)


def reductions(g: BipartiteGraph, primes=(2,)) -> list[ReductionReport]:
    """Verify every applicable reduction identity on the graph."""
    out = []
    for y in g.ys:
        if g.xs and g.col(y) == set(g.xs):
            out.append(full_column_reduction(g, y, primes))
    for x1, x2 in itertools.permutations(g.xs, 2):
        if g.row(x2) <= g.row(x1):
            out.append(nested_row_reduction(g, x1, x2, primes))
    return out


# ---------------------------------------------------------------------------
# Colex lower bound check


@dataclass
class ColexReport:
    betti: dict[str, tuple[int, ...]]
    bound: tuple[int, ...]
    verdict: str  # "obeys" | "violated"
    violations: list[tuple[str, int]]
    tight: bool


def check_colex_lower_bound(fam: UniformFamily, primes=(2,),
                            max_vertices: int | None = 14) -> ColexReport:
    """Compare oracle Betti numbers of I(K) with the colexsegment bound."""
    supports = fam.supports_as_sets()
    verts = fam.support()
    tables = hochster_betti_table(supports, verts, primes=primes,
                                  max_vertices=max_vertices)
    bound = colex_closed_form(len(fam.members), fam.d)
    betti = {fld: t.totals() for fld, t in tables.items()}
    violations = []
    for fld, vec in betti.items():
        width = max(len(vec), len(bound))
        for i in range(width):
            have = vec[i] if i < len(vec) else 0
            need = bound[i] if i < len(bound) else 0
            if have < need:
                violations.append((fld, i))
    tight = all(tuple(vec) == tuple(bound) for vec in betti.values())
    return ColexReport(betti, bound, "obeys" if not violations else "violated",
                       violations, tight)


# ---------------------------------------------------------------------------
# Enumeration up to isomorphism


def enumerate_bipartite(m: int, n: int, no_isolated_x=False, no_isolated_y=False,
                        connected=False) -> list[BipartiteGraph]:
    """All bipartite graphs on |X| = m, |Y| = n up to row/column permutation.

    The canonical form of a biadjacency matrix is the minimum of its
    row-major bit strings over all permutations; one representative per
    orbit is returned, in canonical order.
    """
    if m > 4 or n > 4:
        raise ValueError("enumeration is limited to parts of size 4")
    mn = m * n
    count = 1 << mn
    masks = np.arange(count, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(mn, dtype=np.int64)) & 1  # row-major
    canon = masks.copy()
    # weight position (i, j) so that integer order equals row-major
    # lexicographic order on matrices
    weights = 1 << np.arange(mn - 1, -1, -1, dtype=np.int64)
    rank = bits @ weights
    order = np.empty(count, dtype=np.int64)
    order[rank] = masks
    canon = rank.copy()
    for sigma in itertools.permutations(range(m)):
        for tau in itertools.permutations(range(n)):
            perm = [sigma[i] * n + tau[j] for i in range(m) for j in range(n)]
            vals = bits[:, perm] @ weights
            np.minimum(canon, vals, out=canon)
    reps = masks[canon == rank]
    reps = reps[np.argsort(rank[reps])]
    out = []
    for mask in reps.tolist():
        matrix = [[(mask >> (i * n + j)) & 1 for j in range(n)] for i in range(m)]
        if no_isolated_x and any(not any(row) for row in matrix):
            continue
        if no_isolated_y and any(not any(matrix[i][j] for i in range(m))
                                 for j in range(n)):
            continue
        g = BipartiteGraph.from_biadjacency(matrix)
        if connected and not _is_connected(g):
            continue
        out.append(g)
    return out


def _is_connected(g: BipartiteGraph) -> bool:
    verts = set(g.vertices())
    if not verts:
        return True
    start = next(iter(sorted(verts)))
    seen = {start}
    stack = [start]
    adj: dict = {v: set() for v in verts}
    for (x, y) in g.edges:
        adj[x_vertex(x)].add(y_vertex(y))
        adj[y_vertex(y)].add(x_vertex(x))
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == verts


def scan_record(g: BipartiteGraph, primes=(2,)) -> dict:
    """One JSON-ready record of classification and bound verdicts."""
    report = check_bipartite_conjecture(g, primes)
    cls_def = classify_bipartite(g, "definition")
    cls_forb = classify_bipartite(g, "forbidden")
    return {
        "biadjacency": g.biadjacency(),
        "classes": cls_def.flags(),
        "classes_forbidden": cls_forb.flags(),
        "methods_agree": cls_def.flags() == cls_forb.flags(),
        "verdicts": report.verdicts(),
        "fields_agree": report.fields_agree,
        "entries": [
            {"i": e.i, "X": list(e.xset), "lower": e.lower, "upper": e.upper,
             "upper_binomial": e.upper_binomial, "values": e.values}
            for e in report.entries
        ],
        "tightness_matches_class": {
            "lower": report.lower_tight_all == cls_def.nearly_row_nested,
            "upper": report.upper_tight_all == cls_def.horizontal_vertical,
        },
    }
