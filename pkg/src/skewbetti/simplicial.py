"""Exact simplicial homology and finely graded Betti tables.

Everything is computed over the integers: boundary maps are diagonalized by
unimodular row/column operations, which yields ranks over Q and over any
prime field simultaneously and exposes torsion.  On top of the chain-level
engine sit the Stanley-Reisner constructions, the finely graded Betti table
of a squarefree ideal (via induced-subcomplex homology), a general monomial
ideal Betti oracle (via upper Koszul complexes), Alexander duality, and the
Taylor-resolution minimality test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb


# ---------------------------------------------------------------------------
# Integer linear algebra


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def diagonalize(rows: list[list[int]]) -> list[int]:
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns the nonzero diagonal entries.  No divisibility chain is
    enforced; ranks over Q and over F_p and the set of torsion primes are
    already determined by any diagonal form.
    """
    a = [row[:] for row in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    diag: list[int] = []
    k = 0
    while True:
        best = None
        for i in range(k, m):
            ai = a[i]
            for j in range(k, n):
                v = ai[j]
                if v:
                    av = abs(v)
                    if best is None or av < best[0]:
                        best = (av, i, j)
                        if av == 1:
                            break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        a[k], a[pi] = a[pi], a[k]
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
        while True:
            pivot = a[k][k]
            for i in range(k + 1, m):
                v = a[i][k]
                if not v:
                    continue
                if v % pivot == 0:
                    q = v // pivot
                    ak, ai = a[k], a[i]
                    for j in range(k, n):
                        ai[j] -= q * ak[j]
                else:
                    x, y, g = _xgcd(pivot, v)
                    pg, vg = pivot // g, v // g
                    ak, ai = a[k], a[i]
                    for j in range(k, n):
                        u, w = ak[j], ai[j]
                        ak[j] = x * u + y * w
                        ai[j] = -vg * u + pg * w
                    pivot = g
            if all(a[k][j] == 0 for j in range(k + 1, n)):
                break
            pivot = a[k][k]
            for j in range(k + 1, n):
                v = a[k][j]
                if not v:
                    continue
                if v % pivot == 0:
                    q = v // pivot
                    for row in a:
                        row[j] -= q * row[k]
                else:
                    x, y, g = _xgcd(pivot, v)
                    pg, vg = pivot // g, v // g
                    for row in a:
                        u, w = row[k], row[j]
                        row[k] = x * u + y * w
                        row[j] = -vg * u + pg * w
                    pivot = g
            if all(a[i][k] == 0 for i in range(k + 1, m)):
                break
        diag.append(a[k][k])
        k += 1
        if k >= m or k >= n:
            break
    return diag


def _factor_primes(n: int) -> set[int]:
    n = abs(n)
    out = set()
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.add(n)
    return out


@dataclass
class ChainRanks:
    """Reduced homology ranks of a chain complex, per coefficient field."""

    ranks: dict[str, dict[int, int]]
    torsion_primes: set[int]

    def field_ranks(self, fld: str) -> dict[int, int]:
        return {k: v for k, v in self.ranks[fld].items() if v}


def field_name(p: int | None) -> str:
    return "Q" if p is None else f"F{p}"


def chain_homology(sizes: dict[int, int], boundaries: dict[int, list[list[int]]],
                   primes=(2,)) -> ChainRanks:
    """Homology ranks of a complex given by its boundary matrices.

    ``sizes[k]`` is the number of k-cells; ``boundaries[k]`` maps C_k to
    C_{k-1} (rows indexed by (k-1)-cells).  Dimensions absent from ``sizes``
    are zero.  Reduced conventions are the caller's responsibility: include
    the empty cell in dimension -1 for reduced homology.
    """
    diag: dict[int, list[int]] = {}
    torsion: set[int] = set()
    for k, mat in boundaries.items():
        if sizes.get(k, 0) and sizes.get(k - 1, 0):
            d = diagonalize(mat)
        else:
            d = []
        diag[k] = d
        for v in d:
            if abs(v) != 1:
                torsion |= _factor_primes(v)
    ranks: dict[str, dict[int, int]] = {}
    fields: list[int | None] = [None] + sorted(set(primes) | torsion)
    for p in fields:
        out = {}
        for k, nk in sizes.items():
            if p is None:
                rk = len(diag.get(k, []))
                rk1 = len(diag.get(k + 1, []))
            else:
                rk = sum(1 for v in diag.get(k, []) if v % p != 0)
                rk1 = sum(1 for v in diag.get(k + 1, []) if v % p != 0)
            out[k] = nk - rk - rk1
        ranks[field_name(p)] = out
    return ChainRanks(ranks, torsion)


# ---------------------------------------------------------------------------
# Simplicial complexes


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite abstract simplicial complex, stored by facets.

    The complex {)} with the single face {} (``facets == (frozenset(),)``)
    and the void complex (``is_void``) are distinct: the former has reduced
    homology of rank 1 in dimension -1, the latter none at all.
    """

    vertices: tuple
    facets: tuple[frozenset, ...]
    is_void: bool = False

    @classmethod
    def from_facets(cls, vertices, facets) -> "SimplicialComplex":
        vertices = tuple(sorted(set(vertices)))
        fs = [frozenset(f) for f in facets]
        for f in fs:
            if not f <= set(vertices):
                raise ValueError(f"facet {sorted(f)} not inside the vertex set")
        maximal = [f for f in fs if not any(f < g for g in fs)]
        uniq = sorted(set(maximal), key=lambda f: (len(f), tuple(sorted(f))))
        if not uniq:
            return cls(vertices, (), is_void=True)
        return cls(vertices, tuple(uniq))

    @classmethod
    def void(cls, vertices=()) -> "SimplicialComplex":
        return cls(tuple(sorted(set(vertices))), (), is_void=True)

    @classmethod
    def irrelevant(cls, vertices=()) -> "SimplicialComplex":
        """The complex whose only face is the empty set."""
        return cls(tuple(sorted(set(vertices))), (frozenset(),))

    def is_face(self, s) -> bool:
        s = frozenset(s)
        return not self.is_void and any(s <= f for f in self.facets)

    def faces(self) -> set[frozenset]:
        """All faces, including the empty face (unless void)."""
        if self.is_void:
            return set()
        out: set[frozenset] = set()
        for f in self.facets:
            fl = sorted(f)
            for r in range(len(fl) + 1):
                out.update(map(frozenset, itertools.combinations(fl, r)))
        return out

    def induced(self, sub) -> "SimplicialComplex":
        sub = frozenset(sub)
        if self.is_void:
            return SimplicialComplex.void(sub)
        return SimplicialComplex.from_facets(sub, [f & sub for f in self.facets])

    def dim(self) -> int:
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1


def _boundary_data(faces: set[frozenset]):
    by_dim: dict[int, list[frozenset]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for k in by_dim:
        by_dim[k].sort(key=lambda f: tuple(sorted(f)))
    sizes = {k: len(v) for k, v in by_dim.items()}
    index = {k: {f: i for i, f in enumerate(v)} for k, v in by_dim.items()}
    boundaries: dict[int, list[list[int]]] = {}
    for k in sorted(by_dim):
        if k - 1 not in by_dim:
            continue
        rows = [[0] * len(by_dim[k]) for _ in by_dim[k - 1]]
        for j, f in enumerate(by_dim[k]):
            for pos, v in enumerate(sorted(f)):
                sub = f - {v}
                rows[index[k - 1][sub]][j] = -1 if pos % 2 else 1
        boundaries[k] = rows
    return sizes, boundaries


def collapse_faces(faces: set[frozenset], universe) -> set[frozenset]:
    """Remove free face pairs until none remain (homotopy-preserving)."""
    faces = set(faces)
    universe = sorted(universe)

    def live_cofaces(s):
        return [s | {v} for v in universe if v not in s and (s | {v}) in faces]

    queue = sorted(faces, key=lambda f: (-len(f), tuple(sorted(f))))
    while queue:
        nxt: list[frozenset] = []
        for s in queue:
            if s not in faces:
                continue
            cof = live_cofaces(s)
            if len(cof) == 1:
                t = cof[0]
                faces.discard(s)
                faces.discard(t)
                for parent in (s, t):
                    for v in parent:
                        sub = parent - {v}
                        if sub in faces:
                            nxt.append(sub)
        queue = sorted(set(nxt), key=lambda f: (-len(f), tuple(sorted(f))))
    return faces


@dataclass
class HomologyProfile:
    """Reduced homology ranks per dimension and coefficient field."""

    ranks_q: dict[int, int]
    ranks_mod: dict[int, dict[int, int]]
    torsion_primes: list[int]

    def rank(self, dim: int, p: int | None = None) -> int:
        table = self.ranks_q if p is None else self.ranks_mod.get(p, {})
        return table.get(dim, 0)

    def nonzero(self, p: int | None = None) -> dict[int, int]:
        table = self.ranks_q if p is None else self.ranks_mod.get(p, {})
        return {k: v for k, v in table.items() if v}

    def is_acyclic(self) -> bool:
        if any(self.ranks_q.values()):
            return False
        return not any(any(t.values()) for t in self.ranks_mod.values())

    def to_json(self) -> dict:
        return {
            "ranks_Q": {str(k): v for k, v in sorted(self.nonzero().items())},
            "ranks_mod": {str(p): {str(k): v for k, v in sorted(self.nonzero(p).items())}
                          for p in sorted(self.ranks_mod)},
            "torsion_primes": self.torsion_primes,
        }


def reduced_homology(cx: SimplicialComplex, primes=(2, 3), collapse=False) -> HomologyProfile:
    """Reduced simplicial homology from integer diagonalization.

    The augmented chain complex is used, so the complex {} reports rank 1
    in dimension -1 and the void complex reports all zeros.  ``collapse``
    shrinks the complex by free-face collapses first (same answer, used by
    the Betti oracles for speed).
    """
    faces = cx.faces()
    if collapse:
        faces = collapse_faces(faces, cx.vertices)
    sizes, boundaries = _boundary_data(faces)
    cr = chain_homology(sizes, boundaries, primes)
    dims = range(-1, (max(sizes) if sizes else -1) + 1)
    ranks_q = {k: cr.ranks["Q"].get(k, 0) for k in dims}
    ranks_mod = {}
    for p in sorted(set(primes) | cr.torsion_primes):
        fr = cr.ranks.get(field_name(p), cr.ranks["Q"])
        ranks_mod[p] = {k: fr.get(k, 0) for k in dims}
    return HomologyProfile(ranks_q, ranks_mod, sorted(cr.torsion_primes))


def join_complexes(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join on disjointly tagged vertex copies."""
    av = [("L", v) for v in a.vertices]
    bv = [("R", v) for v in b.vertices]
    facets = []
    for fa in (a.facets if not a.is_void else []):
        for fb in (b.facets if not b.is_void else []):
            facets.append(frozenset(("L", v) for v in fa) | frozenset(("R", v) for v in fb))
    if a.is_void or b.is_void:
        return SimplicialComplex.void(av + bv)
    return SimplicialComplex.from_facets(av + bv, facets)


# ---------------------------------------------------------------------------
# Graphs


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple
    edges: frozenset[frozenset]

    @classmethod
    def from_edges(cls, vertices, edges) -> "SimpleGraph":
        vertices = tuple(sorted(set(vertices)))
        es = set()
        vs = set(vertices)
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise ValueError(f"loop at {u}")
            if u not in vs or v not in vs:
                raise ValueError(f"edge {e} outside the vertex set")
            es.add(frozenset((u, v)))
        return cls(vertices, frozenset(es))

    def neighbors(self, v) -> set:
        return {next(iter(e - {v})) for e in self.edges if v in e}

    def induced(self, sub) -> "SimpleGraph":
        sub = set(sub)
        return SimpleGraph(tuple(sorted(sub)),
                           frozenset(e for e in self.edges if e <= sub))


def x_vertex(label):
    return ("x", label)


def y_vertex(label):
    return ("y", label)


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph on tagged vertex classes X and Y."""

    xs: tuple
    ys: tuple
    edges: frozenset[tuple]  # pairs (x_label, y_label)

    def __post_init__(self):
        xs, ys = set(self.xs), set(self.ys)
        for (x, y) in self.edges:
            if x not in xs or y not in ys:
                raise ValueError(f"edge {(x, y)} outside the parts")

    def vertices(self) -> tuple:
        return tuple(x_vertex(x) for x in self.xs) + tuple(y_vertex(y) for y in self.ys)

    def to_simple(self) -> SimpleGraph:
        return SimpleGraph.from_edges(
            self.vertices(),
            [(x_vertex(x), y_vertex(y)) for (x, y) in self.edges])

    def row(self, x) -> set:
        return {y for (xx, y) in self.edges if xx == x}

    def col(self, y) -> set:
        return {x for (x, yy) in self.edges if yy == y}

    def degree(self, x) -> int:
        return len(self.row(x))

    def biadjacency(self) -> list[list[int]]:
        return [[1 if (x, y) in self.edges else 0 for y in self.ys] for x in self.xs]

    @classmethod
    def from_biadjacency(cls, matrix) -> "BipartiteGraph":
        m = len(matrix)
        n = len(matrix[0]) if m else 0
        edges = {(i + 1, j + 1) for i in range(m) for j in range(n) if matrix[i][j]}
        return cls(tuple(range(1, m + 1)), tuple(range(1, n + 1)), frozenset(edges))


def maximal_independent_sets(g: SimpleGraph) -> list[frozenset]:
    """All maximal independent sets (Bron-Kerbosch on the complement)."""
    verts = list(g.vertices)
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    comp = [0] * n
    full = (1 << n) - 1
    adj = [0] * n
    for e in g.edges:
        u, v = tuple(e)
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]
    for i in range(n):
        comp[i] = full & ~adj[i] & ~(1 << i)
    out: list[int] = []

    def bk(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pool = p | x
        pivot, best = -1, -1
        m = pool
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            cnt = bin(p & comp[u]).count("1")
            if cnt > best:
                best, pivot = cnt, u
        cand = p & ~comp[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            bit = 1 << v
            cand &= cand - 1
            bk(r | bit, p & comp[v], x & comp[v])
            p &= ~bit
            x |= bit
    if n:
        bk(0, full, 0)
    sets = []
    for mask in out:
        sets.append(frozenset(verts[i] for i in range(n) if mask >> i & 1))
    return sets


def independence_complex(g: SimpleGraph) -> SimplicialComplex:
    """The complex whose faces are the independent vertex sets of g."""
    if not g.vertices:
        return SimplicialComplex.irrelevant()
    return SimplicialComplex.from_facets(g.vertices, maximal_independent_sets(g))


def alexander_dual(cx: SimplicialComplex) -> SimplicialComplex:
    """The canonical Alexander dual {V - G : G not a face} on the same vertices."""
    verts = cx.vertices
    n = len(verts)
    if n > 20:
        raise ValueError("Alexander dual by subset scan is limited to 20 vertices")
    vset = frozenset(verts)
    facets = []
    # facets of the dual = complements of minimal non-faces
    for r in range(n + 1):
        for s in itertools.combinations(verts, r):
            s = frozenset(s)
            if cx.is_face(s):
                continue
            if all(cx.is_face(s - {v}) for v in s):
                facets.append(vset - s)
    if not facets:
        return SimplicialComplex.void(verts)
    return SimplicialComplex.from_facets(verts, facets)


# ---------------------------------------------------------------------------
# Betti tables


def support_sort_key(s) -> tuple:
    return tuple(sorted(s))


@dataclass
class BettiTable:
    """Finely graded Betti numbers of an ideal: (i, support) -> value.

    The convention is that of the ideal itself, beta_i(I) = beta_{i+1}(S/I).
    """

    field: str
    entries: dict[tuple[int, frozenset], int] = field(default_factory=dict)

    def set(self, i: int, support, value: int):
        if value:
            self.entries[(i, frozenset(support))] = value

    def get(self, i: int, support) -> int:
        return self.entries.get((i, frozenset(support)), 0)

    def beta_ij(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for (i, s), v in self.entries.items():
            out[(i, len(s))] = out.get((i, len(s)), 0) + v
        return out

    def totals(self) -> tuple[int, ...]:
        if not self.entries:
            return ()
        top = max(i for (i, _) in self.entries)
        out = [0] * (top + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return tuple(out)

    def strands(self) -> dict[int, dict[int, int]]:
        """Maps strand s = j - i to {i: beta_{i,i+s}}."""
        out: dict[int, dict[int, int]] = {}
        for (i, j), v in self.beta_ij().items():
            out.setdefault(j - i, {})[i] = out.setdefault(j - i, {}).get(i, 0) + v
        return out

    def x_bullet(self, i: int, x_part) -> int:
        """Sum of entries whose x-tagged support part equals x_part exactly."""
        x_part = frozenset(x_part)
        total = 0
        for (ii, s), v in self.entries.items():
            if ii == i and frozenset(t for t in s if t[0] == "x") == x_part:
                total += v
        return total

    def regularity(self):
        vals = [j - i for (i, j), v in self.beta_ij().items() if v]
        return max(vals) if vals else None

    def projective_dimension(self):
        vals = [i for (i, _), v in self.entries.items() if v]
        return max(vals) if vals else None

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        mine = {k: v for k, v in self.entries.items() if v}
        them = {k: v for k, v in other.entries.items() if v}
        return mine == them

    def to_json(self) -> dict:
        items = sorted(self.entries.items(),
                       key=lambda kv: (kv[0][0], support_sort_key(kv[0][1])))
        return {
            "convention": "ideal",
            "field": self.field,
            "entries": [{"i": i, "support": [list(t) if isinstance(t, tuple) else t
                                             for t in sorted(s)], "value": v}
                        for (i, s), v in items],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BettiTable":
        table = cls(data["field"])
        for row in data["entries"]:
            support = frozenset(tuple(t) if isinstance(t, list) else t
                                for t in row["support"])
            table.set(row["i"], support, row["value"])
        return table

    def to_tsv(self) -> str:
        """Coarse view: rows are strands (j - i), columns homological degree."""
        bij = self.beta_ij()
        if not bij:
            return "total:\t0\n"
        imax = max(i for (i, _) in bij)
        lines = ["\t".join(["strand\\i"] + [str(i) for i in range(imax + 1)])]
        totals = [0] * (imax + 1)
        for s in sorted({j - i for (i, j) in bij}):
            row = [bij.get((i, i + s), 0) for i in range(imax + 1)]
            for i, v in enumerate(row):
                totals[i] += v
            lines.append("\t".join([str(s)] + [str(v) if v else "." for v in row]))
        lines.append("\t".join(["total"] + [str(v) for v in totals]))
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# The Hochster-formula oracle


def _check_minimal_supports(supports):
    for a in supports:
        if not a:
            raise ValueError("empty generating support")
        for b in supports:
            if a is not b and a <= b:
                raise ValueError(f"non-minimal generators: {sorted(a)} divides {sorted(b)}")


def _sr_faces(verts: list, supports: list[frozenset]) -> set[frozenset]:
    """Faces of the Stanley-Reisner complex (subsets containing no support)."""
    by_vertex: dict[object, list[frozenset]] = {v: [] for v in verts}
    for s in supports:
        for v in s:
            by_vertex[v].append(s)
    faces: set[frozenset] = set()

    def rec(i: int, cur: frozenset):
        faces.add(cur)
        for j in range(i, len(verts)):
            v = verts[j]
            nxt = cur | {v}
            if any(s <= nxt for s in by_vertex[v]):
                continue
            rec(j + 1, nxt)

    rec(0, frozenset())
    return faces


def _rank_polys(faces: set[frozenset], universe, primes) -> dict[str, dict[int, int]]:
    faces = collapse_faces(faces, universe)
    sizes, boundaries = _boundary_data(faces)
    cr = chain_homology(sizes, boundaries, primes)
    out = {}
    for p in [None] + list(primes):
        fr = cr.ranks.get(field_name(p), cr.ranks["Q"])
        out[field_name(p)] = {k: v for k, v in fr.items() if v}
    return out


def _join_polys(polys: list[dict[int, int]]) -> dict[int, int]:
    """Combine reduced-homology rank polynomials under simplicial join."""
    acc = {-1: 1}
    for poly in polys:
        nxt: dict[int, int] = {}
        for da, ra in acc.items():
            for db, rb in poly.items():
                key = da + db + 1
                nxt[key] = nxt.get(key, 0) + ra * rb
        acc = nxt
        if not acc:
            break
    return acc


class _ComponentHomology:
    """Per-vertex-set cache of component complex homology for one ideal."""

    def __init__(self, supports: list[frozenset], primes):
        self.supports = supports
        self.primes = tuple(primes)
        self.memo: dict[frozenset, dict[str, dict[int, int]]] = {}

    def components(self, sub: frozenset) -> list[frozenset] | None:
        """Connected support components covering ``sub``; None if some vertex
        is in no support (cone vertex, complex contractible)."""
        inside = [s for s in self.supports if s <= sub]
        parent: dict[object, object] = {}

        def find(v):
            while parent[v] is not v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for s in inside:
            for v in s:
                parent.setdefault(v, v)
            it = iter(s)
            root = find(next(it))
            for v in it:
                parent[find(v)] = root
        if len(parent) != len(sub):
            return None
        comps: dict[object, set] = {}
        for v in parent:
            comps.setdefault(find(v), set()).add(v)
        return [frozenset(c) for c in comps.values()]

    def ranks(self, sub: frozenset) -> dict[str, dict[int, int]] | None:
        """Reduced homology rank polynomials of the induced complex on sub."""
        comps = self.components(sub)
        if comps is None:
            return None
        per_field: dict[str, list[dict[int, int]]] = {}
        for comp in comps:
            if comp not in self.memo:
                inside = [s for s in self.supports if s <= comp]
                faces = _sr_faces(sorted(comp), inside)
                self.memo[comp] = _rank_polys(faces, comp, self.primes)
            for fld, poly in self.memo[comp].items():
                per_field.setdefault(fld, []).append(poly)
        return {fld: _join_polys(polys) for fld, polys in per_field.items()}


def hochster_betti_table(generating_supports, vertices, primes=(2, 3), *,
                         superset=None, fixed_part=None,
                         use_components=True,
                         max_vertices: int | None = None) -> dict[str, BettiTable]:
    """Finely graded Betti tables of a squarefree monomial ideal, per field.

    For every vertex subset V', the rank of the reduced homology of the
    induced Stanley-Reisner subcomplex in dimension |V'| - i - 2 is recorded
    as beta_{i,V'}.  Subsets are scanned in colexicographic order.

    ``superset`` restricts the scan to V' containing it; ``fixed_part``
    is a pair (part, exact) restricting to V' with V' . part == exact.
    ``use_components=False`` disables the connected-component join shortcut
    (slow path, kept for cross-validation).
    """
    supports = [frozenset(s) for s in generating_supports]
    _check_minimal_supports(supports)
    verts = sorted(set(vertices))
    for s in supports:
        if not s <= set(verts):
            raise ValueError(f"support {sorted(s)} outside the vertex set")
    if max_vertices is not None and len(verts) > max_vertices:
        raise OracleSizeError(f"{len(verts)} vertices exceeds the oracle limit "
                              f"{max_vertices}")
    primes = tuple(primes)
    engine = _ComponentHomology(supports, primes)
    tables = {field_name(p): BettiTable(field_name(p)) for p in [None] + list(primes)}

    fixed_bits = 0
    fixed_target = 0
    base = frozenset(superset) if superset else frozenset()
    if fixed_part is not None:
        part, exact = fixed_part
        part, exact = frozenset(part), frozenset(exact)
        base = base | exact
        fixed_bits = sum(1 << i for i, v in enumerate(verts) if v in part)
        fixed_target = sum(1 << i for i, v in enumerate(verts) if v in exact)

    n = len(verts)
    base_bits = sum(1 << i for i, v in enumerate(verts) if v in base)
    for mask in range(1 << n):  # integer order == colex order on subsets
        if mask & base_bits != base_bits:
            continue
        if fixed_part is not None and mask & fixed_bits != fixed_target:
            continue
        sub = frozenset(verts[i] for i in range(n) if mask >> i & 1)
        if not sub:
            continue
        if use_components:
            polys = engine.ranks(sub)
            if polys is None:
                continue
        else:
            inside = [s for s in supports if s <= sub]
            if not inside:
                continue
            faces = _sr_faces(sorted(sub), inside)
            polys = _rank_polys(faces, sub, primes)
        for fld, poly in polys.items():
            for dim, rank in poly.items():
                i = len(sub) - dim - 2
                if i >= 0 and rank:
                    tables[fld].set(i, sub, rank)
    return tables


class OracleSizeError(ValueError):
    """Raised when an input exceeds the homology oracle's size guard."""


# ---------------------------------------------------------------------------
# Upper Koszul oracle for arbitrary monomial ideals


def _lcm_exp(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        if out.get(k, 0) < v:
            out[k] = v
    return out


def _divides(a: dict, b: dict) -> bool:
    return all(b.get(k, 0) >= v for k, v in a.items())


def lcm_lattice(generators: list[dict]) -> list[dict]:
    """All joins of nonempty generator subsets, as exponent dicts."""
    seen: dict[tuple, dict] = {}
    frontier = []
    for g in generators:
        key = tuple(sorted(g.items()))
        if key not in seen:
            seen[key] = dict(g)
            frontier.append(dict(g))
    while frontier:
        nxt = []
        for a in frontier:
            for g in generators:
                j = _lcm_exp(a, g)
                key = tuple(sorted(j.items()))
                if key not in seen:
                    seen[key] = j
                    nxt.append(j)
        frontier = nxt
    return list(seen.values())


def monomial_betti_numbers(generators, primes=(2,)) -> dict[str, dict[tuple[int, tuple], int]]:
    """Multigraded Betti numbers of any monomial ideal via Koszul complexes.

    For each multidegree a in the lcm lattice, beta_{i,a}(I) is the rank of
    the reduced homology in dimension i-1 of the simplicial complex of
    squarefree vectors S <= supp(a) with x^a / x^S in I.  Returns, per
    field, a map (i, sorted exponent items) -> value.
    """
    gens = [dict(g) for g in generators]
    out: dict[str, dict[tuple[int, tuple], int]] = {field_name(p): {}
                                                    for p in [None] + list(primes)}
    for alpha in lcm_lattice(gens):
        supp = sorted(alpha)
        faces = set()
        for r in range(len(supp) + 1):
            for s in itertools.combinations(supp, r):
                reduced = dict(alpha)
                for v in s:
                    reduced[v] -= 1
                if any(_divides(g, reduced) for g in gens):
                    faces.add(frozenset(s))
        if not faces:
            continue
        polys = _rank_polys(faces, supp, tuple(primes))
        key_alpha = tuple(sorted(alpha.items()))
        for fld, poly in polys.items():
            for dim, rank in poly.items():
                i = dim + 1
                if i >= 0 and rank:
                    out[fld][(i, key_alpha)] = rank
    return out


def monomial_betti_totals(generators, primes=(2,)) -> dict[str, tuple[int, ...]]:
    """Coarse Betti vectors (beta_0, beta_1, ...) of a monomial ideal."""
    fine = monomial_betti_numbers(generators, primes)
    out = {}
    for fld, entries in fine.items():
        if not entries:
            out[fld] = ()
            continue
        top = max(i for (i, _) in entries)
        vec = [0] * (top + 1)
        for (i, _), v in entries.items():
            vec[i] += v
        out[fld] = tuple(vec)
    return out


# ---------------------------------------------------------------------------
# Taylor resolution analysis


@dataclass
class TaylorReport:
    generator_count: int
    upper_bounds: tuple[int, ...]
    minimal: bool
    witness: tuple[tuple[int, ...], int] | None
    star_components: bool | None = None


def taylor_analysis(generators) -> TaylorReport:
    """Minimality of the Taylor resolution on the given monomial generators.

    Non-minimality is witnessed by a subset A and a in A with
    lcm(A) = lcm(A - {a}); it suffices to test A = all generators.  For
    quadratic squarefree input the star-components criterion (every
    connected component of the graph a star) is evaluated as a cross-check.
    """
    gens = [dict(g) if not isinstance(g, (set, frozenset)) else {v: 1 for v in g}
            for g in generators]
    p = len(gens)
    if p == 0:
        raise ValueError("need at least one generator")
    upper = tuple(comb(p, i + 1) for i in range(p))
    minimal = True
    witness = None
    for a_idx, g in enumerate(gens):
        rest: dict = {}
        for j, h in enumerate(gens):
            if j != a_idx:
                rest = _lcm_exp(rest, h)
        if _divides(g, rest):
            minimal = False
            witness = (tuple(range(p)), a_idx)
            break

    star = None
    if all(sum(g.values()) == 2 and set(g.values()) == {1} for g in gens):
        verts = sorted({v for g in gens for v in g}, key=repr)
        graph = SimpleGraph.from_edges(verts, [frozenset(g) for g in gens])
        star = _all_components_stars(graph)
    return TaylorReport(p, upper, minimal, witness, star)


def _all_components_stars(g: SimpleGraph) -> bool:
    seen = set()
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        edges = [e for e in g.edges if e <= comp]
        if len(edges) > len(comp) - 1:
            return False  # has a cycle
        if sum(1 for u in comp if len([e for e in edges if u in e]) > 1) > 1:
            return False  # two branch vertices: contains a 3-edge path
    return True
