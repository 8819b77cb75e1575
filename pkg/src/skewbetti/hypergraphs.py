"""Uniform families, stable ideals, and the complex-of-boxes resolution.

Covers the Gale/colex order machinery on d-sets and d-multisets, strongly
stable (order ideal) checks, the depolarization bijection, d-partite
expansions and Ferrers hypergraphs, the polyhedral complex of boxes with its
monomial labellings, verification that a labelled complex supports a
(minimal) cellular resolution, and the closed Betti formulas that all of
these ideals share.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass
from math import comb, factorial

from .simplicial import chain_homology, field_name


# ---------------------------------------------------------------------------
# Families and orderings

SETS = "sets"
MULTISETS = "multisets"


@dataclass(frozen=True)
class UniformFamily:
    """A finite set of sorted d-tuples: d-subsets or d-multisets of P."""

    d: int
    kind: str
    members: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.kind not in (SETS, MULTISETS):
            raise ValueError(f"kind must be {SETS!r} or {MULTISETS!r}")
        seen = set()
        for t in self.members:
            _validate_tuple(t, self.d, self.kind)
            if t in seen:
                raise ValueError(f"duplicate member {t}")
            seen.add(t)

    @classmethod
    def from_members(cls, members, kind=SETS, d=None) -> "UniformFamily":
        tuples = sorted(tuple(sorted(t)) for t in members)
        if d is None:
            if not tuples:
                raise ValueError("cannot infer degree of an empty family")
            d = len(tuples[0])
        return cls(d, kind, tuple(tuples))

    def support(self) -> tuple[int, ...]:
        return tuple(sorted({i for t in self.members for i in t}))

    def supports_as_sets(self) -> list[frozenset]:
        if self.kind != SETS:
            raise ValueError("squarefree supports need a set family")
        return [frozenset(t) for t in self.members]

    def exponent_vectors(self) -> list[dict]:
        out = []
        for t in self.members:
            e: dict[int, int] = {}
            for i in t:
                e[i] = e.get(i, 0) + 1
            out.append(e)
        return out

    def to_json(self) -> dict:
        return {"d": self.d, "kind": self.kind,
                "members": [list(t) for t in self.members]}

    @classmethod
    def from_json(cls, data: dict) -> "UniformFamily":
        return cls(data["d"], data["kind"],
                   tuple(tuple(t) for t in data["members"]))


def _validate_tuple(t, d, kind):
    if len(t) != d:
        raise ValueError(f"{t} does not have length {d}")
    if any(i <= 0 for i in t):
        raise ValueError(f"{t} has non-positive entries")
    pairs = zip(t, t[1:])
    if kind == SETS and any(a >= b for a, b in pairs):
        raise ValueError(f"{t} is not strictly increasing")
    if kind == MULTISETS and any(a > b for a, b in zip(t, t[1:])):
        raise ValueError(f"{t} is not weakly increasing")


@dataclass
class GaleComparison:
    leq: bool
    geq: bool
    meet: tuple[int, ...]
    join: tuple[int, ...]


def gale_compare(u, v, kind=SETS) -> GaleComparison:
    """Componentwise comparison, meet, and join of two sorted d-tuples."""
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        raise ValueError("tuples of different degree")
    _validate_tuple(u, len(u), kind)
    _validate_tuple(v, len(v), kind)
    meet = tuple(min(a, b) for a, b in zip(u, v))
    join = tuple(max(a, b) for a, b in zip(u, v))
    _validate_tuple(meet, len(u), kind)
    _validate_tuple(join, len(u), kind)
    return GaleComparison(all(a <= b for a, b in zip(u, v)),
                          all(a >= b for a, b in zip(u, v)), meet, join)


def colex_key(t) -> tuple:
    return tuple(reversed(t))


def colex_iter(d: int, bound: int | None = None):
    """d-subsets of the positive integers in colexicographic order."""
    if d == 0:
        yield ()
        return
    top = itertools.count(d) if bound is None else range(d, bound + 1)
    for mx in top:
        for rest in colex_iter(d - 1, mx - 1):
            yield rest + (mx,)


def colexsegment(g: int, d: int) -> UniformFamily:
    """The first g d-subsets in colex order."""
    if g < 0:
        raise ValueError("negative count")
    members = tuple(itertools.islice(colex_iter(d), g))
    return UniformFamily(d, SETS, members)


def gale_covers_down(t, kind) -> list[tuple[tuple[int, ...], int]]:
    """All tuples obtained by lowering one coordinate by 1, with the index."""
    out = []
    for j, val in enumerate(t):
        low = val - 1
        if low < 1:
            continue
        if kind == SETS and j > 0 and low <= t[j - 1]:
            continue
        if kind == MULTISETS and j > 0 and low < t[j - 1]:
            continue
        out.append((t[:j] + (low,) + t[j + 1:], j))
    return out


@dataclass
class StabilityReport:
    strongly_stable: bool
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None


def stability_check(fam: UniformFamily) -> StabilityReport:
    """Is the family an order ideal in the Gale ordering?

    Checked on covers: every single-coordinate lowering of a member must be
    a member.  The witness is a (member, missing lowered tuple) pair.
    """
    mem = set(fam.members)
    for t in fam.members:
        for low, _j in gale_covers_down(t, fam.kind):
            if low not in mem:
                return StabilityReport(False, (t, low))
    return StabilityReport(True, None)


def depolarize(fam: UniformFamily) -> UniformFamily:
    """The bijection {i_1<...<i_d} -> (i_1, i_2-1, ..., i_d-(d-1))."""
    if fam.kind != SETS:
        raise ValueError("depolarize expects a set family")
    members = tuple(sorted(tuple(i - j for j, i in enumerate(t)) for t in fam.members))
    return UniformFamily(fam.d, MULTISETS, members)


def polarize(fam: UniformFamily) -> UniformFamily:
    """Inverse of depolarize."""
    if fam.kind != MULTISETS:
        raise ValueError("polarize expects a multiset family")
    members = tuple(sorted(tuple(i + j for j, i in enumerate(t)) for t in fam.members))
    return UniformFamily(fam.d, SETS, members)


# ---------------------------------------------------------------------------
# Partite expansion and Ferrers hypergraphs


@dataclass(frozen=True)
class PartiteFamily:
    """A d-partite d-uniform hypergraph: coordinate j lives in part j."""

    d: int
    members: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for t in self.members:
            if len(t) != self.d:
                raise ValueError(f"{t} does not have length {self.d}")
            if any(i <= 0 for i in t):
                raise ValueError(f"{t} has non-positive entries")

    @classmethod
    def from_members(cls, members, d=None) -> "PartiteFamily":
        tuples = sorted(tuple(t) for t in set(map(tuple, members)))
        if d is None:
            if not tuples:
                raise ValueError("cannot infer degree of an empty family")
            d = len(tuples[0])
        return cls(d, tuple(tuples))

    def part_values(self) -> list[tuple[int, ...]]:
        return [tuple(sorted({t[j] for t in self.members})) for j in range(self.d)]

    def to_json(self) -> dict:
        return {"d": self.d, "members": [list(t) for t in self.members]}


def part_variable_name(j: int, i: int, d: int) -> str:
    if d <= len(string.ascii_lowercase):
        return f"{string.ascii_lowercase[j]}{i}"
    return f"x{i}^({j + 1})"


def partite_expansion(fam: UniformFamily) -> PartiteFamily:
    """Spread a set or multiset family across d vertex parts."""
    return PartiteFamily(fam.d, tuple(sorted(fam.members)))


def partite_generators(pf: PartiteFamily) -> list[str]:
    """Generator monomials of the partite edge ideal, as readable strings."""
    return ["".join(part_variable_name(j, i, pf.d) for j, i in enumerate(t))
            for t in pf.members]


def is_ferrers(pf: PartiteFamily) -> tuple[bool, tuple | None]:
    """Order-ideal test in the componentwise product order, with witness."""
    mem = set(pf.members)
    for t in pf.members:
        for j in range(pf.d):
            if t[j] > 1:
                low = t[:j] + (t[j] - 1,) + t[j + 1:]
                if low not in mem:
                    return False, (t, low)
    return True, None


@dataclass
class FerrersEmbedding:
    outer: UniformFamily
    inner: UniformFamily
    anchor: tuple[int, ...]
    part_shift: int
    isomorphic: bool


def ferrers_skew_pair(pf: PartiteFamily) -> FerrersEmbedding:
    """Present a Ferrers hypergraph as F(K - K') for strongly stable K' in K.

    With N the largest part size, the tuple (i_1, ..., i_d) embeds as the
    set {i_1, i_2+N, ..., i_d+(d-1)N}; K is the Gale down-closure of the
    image and K' the members not above the anchor (1, N+1, ..., (d-1)N+1).
    """
    ok, witness = is_ferrers(pf)
    if not ok:
        raise ValueError(f"not a Ferrers hypergraph, witness {witness}")
    d = pf.d
    n_max = max((max(t[j] for t in pf.members) for j in range(d)), default=1) \
        if pf.members else 1
    anchor = tuple(1 + j * n_max for j in range(d))
    image = {tuple(t[j] + j * n_max for j in range(d)) for t in pf.members}
    closure: set[tuple[int, ...]] = set()
    frontier = set(image)
    while frontier:
        closure |= frontier
        nxt = set()
        for t in frontier:
            for low, _ in gale_covers_down(t, SETS):
                if low not in closure:
                    nxt.add(low)
        frontier = nxt
    outer = UniformFamily.from_members(closure, SETS, d)
    inner_members = [t for t in closure
                     if not all(a >= b for a, b in zip(t, anchor))]
    inner = UniformFamily.from_members(inner_members, SETS, d) if inner_members \
        else UniformFamily(d, SETS, ())
    difference = {t for t in closure if all(a >= b for a, b in zip(t, anchor))}
    recovered = {tuple(v - j * n_max for j, v in enumerate(t)) for t in difference}
    return FerrersEmbedding(outer, inner, anchor, n_max,
                            recovered == set(pf.members))


# ---------------------------------------------------------------------------
# The complex of boxes

Box = tuple[tuple[int, ...], ...]

PARTITE = "partite"
SPECIALIZED = "specialized"


@dataclass
class BoxComplex:
    """The vertex-induced box subcomplex of a product of simplices.

    Cells are boxes X_1 x ... x X_d whose full tuple set lies in the
    family; the label of a cell is the lcm of its vertex monomials, which
    for both labellings equals the product over the X_j.
    """

    d: int
    labeling: str
    cells: tuple[Box, ...]

    @staticmethod
    def dim(box: Box) -> int:
        return sum(len(side) - 1 for side in box)

    def f_vector(self) -> tuple[int, ...]:
        top = max((self.dim(b) for b in self.cells), default=-1)
        out = [0] * (top + 1)
        for b in self.cells:
            out[self.dim(b)] += 1
        return tuple(out)

    def label(self, box: Box) -> tuple[tuple, ...]:
        """Exponent vector of the cell label, as sorted (variable, exp) items."""
        exps: dict = {}
        for j, side in enumerate(box):
            for i in side:
                var = (j, i) if self.labeling == PARTITE else i
                exps[var] = exps.get(var, 0) + 1
        return tuple(sorted(exps.items()))

    def boundary(self, box: Box) -> list[tuple[Box, int]]:
        """Codimension-1 faces with the tensor-orientation signs."""
        out = []
        for m, side in enumerate(box):
            if len(side) < 2:
                continue
            prior = sum(len(s) - 1 for s in box[:m])
            for pos, v in enumerate(side):
                face = box[:m] + (tuple(x for x in side if x != v),) + box[m + 1:]
                sign = (-1) ** pos * (-1) ** prior
                out.append((face, sign))
        return out

    def chain_data(self, subset=None):
        cells = self.cells if subset is None else tuple(subset)
        by_dim: dict[int, list[Box]] = {-1: [()]}
        for c in cells:
            by_dim.setdefault(self.dim(c), []).append(c)
        for k in by_dim:
            by_dim[k].sort()
        sizes = {k: len(v) for k, v in by_dim.items()}
        index = {k: {c: i for i, c in enumerate(v)} for k, v in by_dim.items()}
        boundaries: dict[int, list[list[int]]] = {}
        for k in sorted(by_dim):
            if k - 1 not in by_dim or k < 0:
                continue
            rows = [[0] * sizes[k] for _ in range(sizes[k - 1])]
            for j, c in enumerate(by_dim[k]):
                if k == 0:
                    rows[0][j] = 1
                else:
                    for face, sign in self.boundary(c):
                        rows[index[k - 1][face]][j] += sign
            boundaries[k] = rows
        return sizes, boundaries

    def vertex_labels(self) -> dict[Box, tuple]:
        return {c: self.label(c) for c in self.cells if self.dim(c) == 0}


def complex_of_boxes(pf: PartiteFamily, labeling: str = PARTITE) -> BoxComplex:
    """All boxes X_1 x ... x X_d contained in the family, as a cell complex."""
    if labeling not in (PARTITE, SPECIALIZED):
        raise ValueError(f"unknown labeling {labeling!r}")
    if not pf.members:
        raise ValueError("empty family has no box complex")
    members = set(pf.members)
    verts: list[Box] = [tuple((i,) for i in t) for t in sorted(members)]
    seen: set[Box] = set(verts)
    frontier = list(verts)
    part_vals = pf.part_values()
    while frontier:
        nxt = []
        for box in frontier:
            for m in range(pf.d):
                for v in part_vals[m]:
                    if v in box[m]:
                        continue
                    others = [box[j] for j in range(pf.d)]
                    if all(t[:m] + (v,) + t[m + 1:] in members
                           for t in itertools.product(*others)):
                        new = box[:m] + (tuple(sorted(box[m] + (v,))),) + box[m + 1:]
                        if new not in seen:
                            seen.add(new)
                            nxt.append(new)
        frontier = nxt
    return BoxComplex(pf.d, labeling, tuple(sorted(seen, key=lambda b: (BoxComplex.dim(b), b))))


def _exp_divides(a: tuple, b_map: dict) -> bool:
    return all(b_map.get(var, 0) >= e for var, e in a)


@dataclass
class ResolutionReport:
    is_resolution: bool
    is_minimal: bool
    failing_multidegree: tuple | None
    multidegrees_checked: int


def verify_cellular_resolution(bc: BoxComplex, primes=(2,)) -> ResolutionReport:
    """Check acyclicity of every label-bounded subcomplex, and minimality.

    Acyclicity (over Q and the given primes) is tested at every multidegree
    in the lcm lattice of the vertex labels; distinct subcomplexes all arise
    there.  Minimality means no cell shares its label with a codimension-1
    face.
    """
    vlabels = list(bc.vertex_labels().values())
    lattice: set[tuple] = set()
    frontier = {tuple(v) for v in vlabels}
    while frontier:
        lattice |= frontier
        nxt = set()
        for a in frontier:
            amap = dict(a)
            for v in vlabels:
                join = dict(amap)
                for var, e in v:
                    if join.get(var, 0) < e:
                        join[var] = e
                key = tuple(sorted(join.items()))
                if key not in lattice:
                    nxt.add(key)
        frontier = nxt

    labels = {c: bc.label(c) for c in bc.cells}
    failing = None
    ordered = sorted(lattice, key=lambda a: (sum(e for _, e in a), a))
    for alpha in ordered:
        amap = dict(alpha)
        sub = [c for c in bc.cells if _exp_divides(labels[c], amap)]
        sizes, boundaries = bc.chain_data(sub)
        cr = chain_homology(sizes, boundaries, primes)
        acyclic = all(not any(v for v in cr.ranks[field_name(p)].values())
                      for p in [None] + list(primes))
        if not acyclic:
            failing = alpha
            break

    minimal = True
    if failing is None:
        for c in bc.cells:
            for face, _sign in bc.boundary(c):
                if labels[c] == labels[face]:
                    minimal = False
                    break
            if not minimal:
                break
    return ResolutionReport(failing is None, failing is None and minimal,
                            failing, len(lattice))


def label_degree(label: tuple) -> int:
    return sum(e for _, e in label)


# ---------------------------------------------------------------------------
# Closed Betti formulas


def multinomial3(n: int, a: int, b: int, c: int) -> int:
    if min(a, b, c) < 0 or a + b + c != n:
        return 0
    return factorial(n) // (factorial(a) * factorial(b) * factorial(c))


def colex_closed_form(g: int, d: int) -> tuple[int, ...]:
    """Total Betti numbers of the colexsegment ideal with g generators.

    Writes g = C(mu, d) + eps with mu maximal and 0 <= eps < C(mu, d-1);
    beta_i is a sum of trinomial terms plus eps * C(mu+1-d, i).
    """
    if g < 0:
        raise ValueError("negative generator count")
    if g == 0:
        return ()
    mu = d - 1
    while comb(mu + 1, d) <= g:
        mu += 1
    eps = g - comb(mu, d)
    if not 0 <= eps < comb(mu, d - 1):
        raise AssertionError("mu/eps decomposition failed")
    out = []
    i = 0
    while True:
        val = sum(multinomial3(j - 1, i, d - 1, j - d - i) for j in range(d, mu + 1))
        val += eps * comb(mu + 1 - d, i)
        if val == 0 and i > 0:
            break
        out.append(val)
        i += 1
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass
class ClosedBetti:
    vector: tuple[int, ...]
    profile: dict[int, int]  # mu_k (max statistic) or alpha_k (coordinate sum)


def closed_betti_formulas(obj: UniformFamily | PartiteFamily) -> ClosedBetti:
    """Total Betti numbers of the ideal of a stable family or Ferrers
    hypergraph: beta_i = sum_k profile_k * C(k - d, i).

    Set/multiset families must be strongly stable (the profile counts
    members by maximum, after polarization for multisets); partite families
    must be Ferrers (profile counts members by coordinate sum).
    """
    if isinstance(obj, UniformFamily):
        fam = obj
        rep = stability_check(fam)
        if not rep.strongly_stable:
            raise ValueError(f"family is not strongly stable, witness {rep.witness}")
        if fam.kind == MULTISETS:
            fam = polarize(fam)
        profile: dict[int, int] = {}
        for t in fam.members:
            profile[t[-1]] = profile.get(t[-1], 0) + 1
        d = fam.d
    elif isinstance(obj, PartiteFamily):
        ok, witness = is_ferrers(obj)
        if not ok:
            raise ValueError(f"family is not Ferrers, witness {witness}")
        profile = {}
        for t in obj.members:
            profile[sum(t)] = profile.get(sum(t), 0) + 1
        d = obj.d
    else:
        raise TypeError(f"unsupported input {type(obj)!r}")
    if not profile:
        return ClosedBetti((), {})
    top = max(profile) - d
    vector = tuple(sum(a * comb(k - d, i) for k, a in profile.items())
                   for i in range(top + 1))
    return ClosedBetti(vector, dict(sorted(profile.items())))


def depolarize_box(box: Box) -> Box:
    """Image of a box under the coordinatewise depolarization shift."""
    return tuple(tuple(v - j for v in side) for j, side in enumerate(box))
