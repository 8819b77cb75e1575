import itertools
import random
from math import comb

import pytest

from skewbetti.diagrams import Diagram, build_shifted_skew, restrict
from skewbetti.simplicial import (BipartiteGraph, hochster_betti_table,
                                  independence_complex, reduced_homology,
                                  SimpleGraph, x_vertex, y_vertex)
from skewbetti.skew import (FerrersShape, betti_bipartite_closed,
                            betti_nonbipartite, bipartite_supports,
                            ferrers_betti, krull_dimension,
                            max_independent_set_bruteforce, max_matching,
                            nonbipartite_supports, regularity_and_pd,
                            rook_counts, rook_tools, row_nested_x_bullet,
                            spherical_column_subsets)
from conftest import (random_restriction, random_shape_within,
                      random_shifted_restriction)


def oracle_tables(d, primes=(2,)):
    verts = [x_vertex(x) for x in d.rows] + [y_vertex(y) for y in d.cols]
    return hochster_betti_table(bipartite_supports(d), verts, primes=primes)


# ---------------------------------------------------------------------------
# bipartite closed form


def test_full_rectangle_closed_table():
    d = FerrersShape((2, 2)).to_diagram()
    t = betti_bipartite_closed(d)
    assert t.totals() == (4, 4, 1)
    full = frozenset({x_vertex(1), x_vertex(2), y_vertex(1), y_vertex(2)})
    assert t.get(2, full) == 1


def test_bipartite_example_not_spherical_at_full_support():
    shape = build_shifted_skew((12, 11, 7, 6, 4, 2, 1), (11, 9, 6, 3))
    d = restrict(shape, (2, 4, 5, 7), (4, 6, 7, 8, 9, 10, 11, 12))
    t = betti_bipartite_closed(d)
    full = frozenset({x_vertex(x) for x in d.rows}
                     | {y_vertex(y) for y in d.cols})
    assert all(t.get(i, full) == 0 for i in range(13))
    # and the oracle agrees the whole complex is contractible
    cx = independence_complex(SimpleGraph.from_edges(
        [x_vertex(x) for x in d.rows] + [y_vertex(y) for y in d.cols],
        [tuple(s) for s in bipartite_supports(d)]))
    assert reduced_homology(cx, primes=(2,)).is_acyclic()


def test_empty_diagram_zero_table():
    d = Diagram((1,), (2,), frozenset())
    assert betti_bipartite_closed(d).entries == {}


def test_closed_equals_oracle_randomized(rng):
    for _ in range(60):
        d = random_restriction(rng, 11)
        closed = betti_bipartite_closed(d)
        tables = oracle_tables(d)
        assert tables["Q"] == closed
        assert tables["F2"] == closed


def test_pruning_is_validated(rng):
    for _ in range(25):
        d = random_restriction(rng, 9)
        assert betti_bipartite_closed(d, prune=True) == \
            betti_bipartite_closed(d, prune=False)


# ---------------------------------------------------------------------------
# nonbipartite: specialize and direct


def test_nonbipartite_example_both_modes_match_oracle():
    shape = build_shifted_skew((12, 11, 7, 6, 4, 2, 1), (11, 9, 6, 3))
    d = restrict(shape, (2, 4, 5, 7, 8, 10))
    spec = betti_nonbipartite(d, "specialize")
    direct = betti_nonbipartite(d, "direct")
    oracle = hochster_betti_table(nonbipartite_supports(d), d.rows, primes=(2,))
    assert spec == direct == oracle["Q"] == oracle["F2"]


def test_threshold_k4():
    d = restrict(build_shifted_skew((3, 2, 1)), (1, 2, 3, 4))
    assert betti_nonbipartite(d, "specialize").totals() == (6, 8, 3)
    assert betti_nonbipartite(d, "direct").totals() == (6, 8, 3)


def test_single_cell_nonbipartite():
    d = restrict(build_shifted_skew((1,)), (1, 2))
    t = betti_nonbipartite(d, "specialize")
    assert t.totals() == (1,)


def test_consumed_column_regression():
    # row labels re-entering as empty columns must not be read as
    # contractibility: here the complex is a 0-sphere with beta_3 = 1
    d = restrict(build_shifted_skew((4, 1)), (1, 2, 3, 4, 5))
    oracle = hochster_betti_table(nonbipartite_supports(d), d.rows, primes=(2,))
    assert oracle["Q"].totals() == (5, 7, 4, 1)
    assert betti_nonbipartite(d, "specialize") == oracle["Q"]
    assert betti_nonbipartite(d, "direct") == oracle["Q"]


def test_nonbipartite_modes_and_oracle_randomized(rng):
    for _ in range(50):
        d = random_shifted_restriction(rng, 8)
        spec = betti_nonbipartite(d, "specialize")
        direct = betti_nonbipartite(d, "direct")
        oracle = hochster_betti_table(nonbipartite_supports(d), d.rows,
                                      primes=(2,))
        assert spec == direct == oracle["Q"] == oracle["F2"]


def test_specialization_vanishing_on_closed_table(rng):
    # entries of the bipartite closed table never mix a label's two copies
    for _ in range(40):
        n = rng.randint(3, 6)
        shape = random_shape_within(rng, n)
        d = restrict(shape, range(1, n + 1), range(1, n + 1))
        t = betti_bipartite_closed(d)
        for (_i, support) in t.entries:
            xs = {lbl for tag, lbl in support if tag == "x"}
            ys = {lbl for tag, lbl in support if tag == "y"}
            assert not xs & ys


def test_nonbipartite_rejects_unshifted():
    d = Diagram((1,), (2,), frozenset({(1, 2)}))
    with pytest.raises(ValueError):
        betti_nonbipartite(d)


# ---------------------------------------------------------------------------
# regularity and projective dimension


def test_regularity_examples():
    single = Diagram((1,), (2,), frozenset({(1, 2)}))
    rep = regularity_and_pd(single)
    assert (rep.regularity, rep.projective_dimension) == (2, 0)
    rep = regularity_and_pd(FerrersShape((2, 2)).to_diagram())
    assert (rep.regularity, rep.projective_dimension) == (2, 2)
    empty = Diagram((1,), (2,), frozenset())
    rep = regularity_and_pd(empty)
    assert rep.regularity is None and rep.projective_dimension is None


def test_regularity_pd_match_oracle(rng):
    for _ in range(50):
        d = random_restriction(rng, 10)
        rep = regularity_and_pd(d)
        assert rep.pd_certified
        table = oracle_tables(d)["Q"]
        assert rep.regularity == table.regularity()
        assert rep.projective_dimension == table.projective_dimension()


def test_pd_dp_matches_enumeration(rng):
    for _ in range(80):
        d = random_restriction(rng, 11)
        best = None
        for (i, _s) in betti_bipartite_closed(d).entries:
            best = i if best is None else max(best, i)
        rep = regularity_and_pd(d)
        assert rep.projective_dimension == best and rep.pd_certified


def test_shifted_regularity_equals_bipartite_double(rng):
    for _ in range(30):
        d = random_shifted_restriction(rng, 7)
        rep = regularity_and_pd(d)
        oracle = hochster_betti_table(nonbipartite_supports(d), d.rows,
                                      primes=(2,))["Q"]
        assert rep.regularity == oracle.regularity()
        assert rep.projective_dimension == oracle.projective_dimension()


# ---------------------------------------------------------------------------
# Krull dimension


def graph_from_matrix(matrix) -> BipartiteGraph:
    return BipartiteGraph.from_biadjacency(matrix)


def test_krull_examples():
    k22 = graph_from_matrix([[1, 1], [1, 1]])
    rep = krull_dimension(k22)
    assert (rep.alpha, rep.nu) == (2, 2)
    matching = graph_from_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    rep = krull_dimension(matching)
    assert (rep.alpha, rep.nu) == (3, 3)
    single = graph_from_matrix([[1]])
    rep = krull_dimension(single)
    assert (rep.alpha, rep.nu) == (1, 1)


def test_krull_identities_randomized(rng):
    for _ in range(120):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        edges = {(x, y) for x in range(1, m + 1) for y in range(1, n + 1)
                 if rng.random() < 0.5}
        g = BipartiteGraph(tuple(range(1, m + 1)), tuple(range(1, n + 1)),
                           frozenset(edges))
        rep = krull_dimension(g)
        assert rep.alpha == max_independent_set_bruteforce(g)
        total = m + n
        assert rep.alpha + rep.tau == total
        if not rep.has_isolated:
            assert rep.nu + rep.rho == total
        else:
            assert rep.rho is None
        assert rep.tau == rep.nu  # Koenig
        assert len(max_matching(g)) == rep.nu


def test_krull_isolated_vertices_flagged():
    g = BipartiteGraph((1, 2), (1,), frozenset({(1, 1)}))
    rep = krull_dimension(g)
    assert rep.has_isolated and rep.rho is None


# ---------------------------------------------------------------------------
# Ferrers formulas and rook equivalence


def test_ferrers_442():
    fb = ferrers_betti(FerrersShape((4, 4, 2)))
    assert fb.alpha_profile == {2: 1, 3: 2, 4: 3, 5: 3, 6: 1}
    assert fb.coarse == (10, 21, 18, 7, 1)
    assert fb.consistent
    d = FerrersShape((4, 4, 2)).to_diagram()
    assert oracle_tables(d)["Q"].totals() == fb.coarse
    assert betti_bipartite_closed(d).totals() == fb.coarse


def test_ferrers_trivial():
    fb = ferrers_betti(FerrersShape((1,)))
    assert fb.coarse == (1,)


def test_ferrers_formulas_agree_all_small_shapes():
    shapes = []
    def partitions(total, maxpart):
        if total == 0:
            yield ()
            return
        for first in range(min(total, maxpart), 0, -1):
            for rest in partitions(total - first, first):
                yield (first,) + rest
    for cells in range(1, 10):
        shapes.extend(partitions(cells, cells))
    assert len(shapes) > 20
    for lam in shapes:
        fb = ferrers_betti(FerrersShape(lam))
        assert fb.consistent, lam
        assert fb.coarse == betti_bipartite_closed(
            FerrersShape(lam).to_diagram()).totals()


def test_ferrers_fine_matches_x_bullet_formula(rng):
    lam = (3, 2, 2)
    shape = FerrersShape(lam)
    fine = ferrers_betti(shape).fine
    g = BipartiteGraph.from_biadjacency([[1] * p + [0] * (lam[0] - p)
                                         for p in lam])
    for xs in itertools.chain.from_iterable(
            itertools.combinations(range(1, 4), r) for r in (1, 2, 3)):
        mindeg = min(lam[x - 1] for x in xs)
        for i in range(8):
            want = row_nested_x_bullet(mindeg, len(xs), i)
            got = fine.x_bullet(i, {x_vertex(x) for x in xs})
            assert got == want


def test_rook_equivalent_pair():
    rep = rook_tools(FerrersShape((4, 4, 2)), FerrersShape((4, 3, 3)))
    assert rep.rook_equal and rep.alpha_equal and rep.betti_equal


def test_rook_distinguishing_pair():
    rep = rook_tools(FerrersShape((2, 1)), FerrersShape((3,)))
    assert rep.rook_counts_a == (1, 3, 1)
    assert rep.rook_counts_b == (1, 3, 0)
    assert not rep.rook_equal and not rep.alpha_equal and not rep.betti_equal
    assert rep.consistent


def test_rook_identity_pair():
    rep = rook_tools(FerrersShape((3, 1)), FerrersShape((3, 1)))
    assert rep.rook_equal and rep.alpha_equal and rep.betti_equal


def test_rook_three_way_equivalence_exhaustive():
    def partitions(total, maxpart):
        if total == 0:
            yield ()
            return
        for first in range(min(total, maxpart), 0, -1):
            for rest in partitions(total - first, first):
                yield (first,) + rest
    shapes = [lam for cells in range(1, 9) for lam in partitions(cells, cells)]
    for a, b in itertools.combinations(shapes, 2):
        rep = rook_tools(FerrersShape(a), FerrersShape(b))
        assert rep.consistent, (a, b)


# ---------------------------------------------------------------------------
# the column-subset construction


def test_column_subsets_full_rectangle():
    d = FerrersShape((3, 3)).to_diagram()
    subs = spherical_column_subsets(d, 3)
    assert subs == [(1, 2, 3)]


def test_column_subsets_ferrers_22():
    d = FerrersShape((2, 2)).to_diagram()
    subs = spherical_column_subsets(d, 1)
    assert len(subs) >= 2
    for y in subs:
        assert len(y) == 1


def test_column_subsets_two_rows():
    # rows {3,4,5,6} and {3,4,5}: minimum row size 3
    d = restrict(build_shifted_skew((5, 3), (1,)), (1, 2), (3, 4, 5, 6))
    assert sorted(len(d.row_cells(r)) for r in d.rows) == [3, 4]
    for j in (1, 2, 3):
        subs = spherical_column_subsets(d, j)
        assert len(subs) >= comb(3, j)


def test_column_subsets_randomized(rng):
    from skewbetti.diagrams import rectangular_decomposition
    found = 0
    while found < 30:
        d = random_restriction(rng, 11)
        sizes = [len(d.row_cells(r)) for r in d.rows]
        if not sizes or min(sizes) == 0 or min(sizes) > 4:
            continue
        found += 1
        k = min(sizes)
        for j in range(1, k + 1):
            subs = spherical_column_subsets(d, j)
            assert len(subs) >= comb(k, j), (d.to_json(), j)
            for ys in subs:
                dec = rectangular_decomposition(d.sub(d.rows, ys))
                assert dec.spherical
                assert dec.rectangularity == len(ys) - j + 1


def test_exhaustive_restrictions_of_one_shape():
    # every bipartite restriction with labels from a fixed window, checked
    # against the oracle; every shifted restriction checked three ways
    shape = build_shifted_skew((5, 3, 1), (2,))
    labels = range(1, 7)
    for xs in itertools.chain.from_iterable(
            itertools.combinations(labels, r) for r in (1, 2, 3)):
        for ys in itertools.chain.from_iterable(
                itertools.combinations(labels, r) for r in (1, 2, 3)):
            d = restrict(shape, xs, ys)
            if not d.cells:
                continue
            assert oracle_tables(d)["Q"] == betti_bipartite_closed(d)
    for xs in itertools.chain.from_iterable(
            itertools.combinations(labels, r) for r in (2, 3, 4)):
        d = restrict(shape, xs)
        if not d.cells:
            continue
        oracle = hochster_betti_table(nonbipartite_supports(d), d.rows,
                                      primes=(2,))["Q"]
        assert betti_nonbipartite(d, "specialize") == oracle
        assert betti_nonbipartite(d, "direct") == oracle
