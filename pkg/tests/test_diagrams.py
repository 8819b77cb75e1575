import itertools
import json
import random

import pytest

from skewbetti.diagrams import (Diagram, EMPTY_RECT, FULL_RECT, PEDESTAL,
                                StrictPartition, build_shifted_skew,
                                has_pedestal_pattern, parse_dsl,
                                pool_decomposition, rectangular_decomposition,
                                restrict)
from conftest import random_restriction

BIG_SHAPE = ((12, 11, 7, 6, 4, 2, 1), (11, 9, 6, 3))


def test_strict_partition_rejects_weak_increase():
    with pytest.raises(ValueError):
        StrictPartition((3, 3))
    with pytest.raises(ValueError):
        StrictPartition((2, 3))


def test_build_shifted_skew_staircase_cells():
    shape = build_shifted_skew(*BIG_SHAPE)
    assert sorted(shape.staircase_cells()) == [(5, 6), (6, 7), (7, 8)]


def test_build_single_cell():
    assert build_shifted_skew((1,)).cells == {(1, 2)}


def test_build_staircase_is_all_pairs():
    shape = build_shifted_skew((3, 2, 1))
    assert shape.cells == {(i, j) for i in range(1, 5) for j in range(i + 1, 5)}


def test_build_rejects_mu_not_contained():
    with pytest.raises(ValueError):
        build_shifted_skew((3, 2), (3,))
    with pytest.raises(ValueError):
        build_shifted_skew((3,), (2, 1))


def test_restrict_bipartite_example():
    shape = build_shifted_skew(*BIG_SHAPE)
    d = restrict(shape, (2, 4, 5, 7), (4, 6, 7, 8, 9, 10, 11, 12))
    assert sorted(d.cells) == [(2, 12), (4, 8), (4, 9), (4, 10), (5, 6),
                               (5, 7), (5, 8), (5, 9), (7, 8)]
    assert not d.shifted


def test_restrict_shifted_example():
    shape = build_shifted_skew(*BIG_SHAPE)
    d = restrict(shape, (2, 4, 5, 7, 8, 10))
    assert sorted(d.cells) == [(4, 8), (4, 10), (5, 7), (5, 8), (7, 8)]
    assert d.shifted and d.rows == d.cols


def test_restrict_empty():
    shape = build_shifted_skew(*BIG_SHAPE)
    d = restrict(shape, (), ())
    assert d.cells == frozenset() and d.rows == () and d.cols == ()


def walkthrough_diagram() -> Diagram:
    cells = []
    spans = {3: (13, 15), 4: (11, 15), 5: (10, 14), 6: (9, 13), 7: (8, 13),
             8: (7, 7), 9: (6, 7), 10: (5, 7), 12: (1, 6)}
    for r, (a, b) in spans.items():
        cells += [(r, c) for c in range(a, b + 1)]
    cells += [(11, c) for c in range(2, 7)]
    cells += [(13, c) for c in range(4, 7)]
    cells += [(14, 4), (14, 5)]
    return Diagram(tuple(range(1, 15)), tuple(range(1, 17)), frozenset(cells))


def test_walkthrough_decomposition():
    dec = rectangular_decomposition(walkthrough_diagram())
    kinds = [(p.kind, p.rows, p.cols) for p in dec.pieces]
    assert kinds == [
        (EMPTY_RECT, (1, 2), (16,)),
        (FULL_RECT, (3, 4), (13, 14, 15)),
        (FULL_RECT, (5, 6, 7), (10, 11, 12)),
        (EMPTY_RECT, (), (8, 9)),
        (FULL_RECT, (8, 9, 10), (7,)),
        (PEDESTAL, (11, 12, 13), (2, 3, 4, 5, 6)),
    ]
    assert dec.rectangularity == 4
    assert not dec.spherical
    assert len(dec.excess) == 15
    assert dec.leftover_rows == (14,) and dec.leftover_cols == (1,)


def test_bipartite_example_decomposition():
    shape = build_shifted_skew(*BIG_SHAPE)
    d = restrict(shape, (2, 4, 5, 7), (4, 6, 7, 8, 9, 10, 11, 12))
    dec = rectangular_decomposition(d)
    assert [(p.kind, p.rows, p.cols) for p in dec.pieces] == [
        (FULL_RECT, (2,), (12,)),
        (EMPTY_RECT, (), (11,)),
        (FULL_RECT, (4,), (8, 9, 10)),
        (FULL_RECT, (5,), (6, 7)),
        (EMPTY_RECT, (7,), (4,)),
    ]
    assert sorted(dec.excess) == [(5, 8), (5, 9), (7, 8)]
    assert dec.rectangularity == 3 and not dec.spherical


def test_single_cell_decomposition():
    dec = rectangular_decomposition(Diagram((1,), (2,), frozenset({(1, 2)})))
    assert dec.spherical and dec.rectangularity == 1
    assert [p.kind for p in dec.pieces] == [FULL_RECT]


def test_pedestal_pattern_examples():
    shape = build_shifted_skew(*BIG_SHAPE)
    d = restrict(shape, (2, 4, 5, 7), (4, 6, 7, 8, 9, 10, 11, 12))
    assert has_pedestal_pattern(d)  # witness (5,6), (7,8), missing (7,6)
    full = Diagram((1, 2), (3, 4), frozenset({(1, 3), (1, 4), (2, 3), (2, 4)}))
    assert not has_pedestal_pattern(full)
    ped = Diagram((1, 2), (3, 4), frozenset({(1, 3), (1, 4), (2, 4)}))
    assert has_pedestal_pattern(ped)


def test_decomposition_implies_pattern(rng):
    # pedestal piece => pattern; spherical => no pattern
    for _ in range(120):
        d = random_restriction(rng, 10)
        dec = rectangular_decomposition(d)
        if any(p.kind == PEDESTAL for p in dec.pieces):
            assert has_pedestal_pattern(d)
        if dec.spherical:
            assert not has_pedestal_pattern(d)


def test_pieces_partition_labels(rng):
    for _ in range(150):
        d = random_restriction(rng, 11)
        dec = rectangular_decomposition(d)
        rows_seen = list(dec.leftover_rows)
        cols_seen = list(dec.leftover_cols)
        for p in dec.pieces:
            rows_seen += list(p.rows)
            cols_seen += list(p.cols)
        assert sorted(rows_seen) == list(d.rows)
        assert sorted(cols_seen) == list(d.cols)
        # every cell is in exactly one piece region or excess
        for cell in d.cells:
            hits = sum(1 for p in dec.pieces
                       if cell[0] in set(p.rows) and cell[1] in set(p.cols))
            assert hits + (cell in dec.excess) == 1


def test_rectangularity_monotone_exhaustive(rng):
    # every sub-restriction of a small diagram has rectangularity <= the whole
    for _ in range(25):
        d = random_restriction(rng, 8)
        base = rectangular_decomposition(d).rectangularity
        for xs in _subsets(d.rows):
            for ys in _subsets(d.cols):
                sub = d.sub(xs, ys)
                if not xs and not ys:
                    continue
                assert rectangular_decomposition(sub).rectangularity <= base


def _subsets(items):
    out = []
    for r in range(len(items) + 1):
        out.extend(itertools.combinations(items, r))
    return out


def test_ferrers_decomposition_is_full_then_empty():
    for lam in [(4, 4, 2), (3, 1, 1), (5,), (2, 2, 2, 2)]:
        rows = tuple(range(1, len(lam) + 1))
        cols = tuple(range(1, lam[0] + 1))
        cells = frozenset((i + 1, j + 1) for i, p in enumerate(lam) for j in range(p))
        dec = rectangular_decomposition(Diagram(rows, cols, cells))
        kinds = [p.kind for p in dec.pieces]
        assert kinds in ([FULL_RECT], [FULL_RECT, EMPTY_RECT])


def test_excess_removal_is_idempotent(rng):
    for _ in range(120):
        d = random_restriction(rng, 11)
        dec = rectangular_decomposition(d)
        cleaned = Diagram(d.rows, d.cols, d.cells - dec.excess, d.shifted)
        dec2 = rectangular_decomposition(cleaned)
        assert dec2.pieces == dec.pieces
        assert dec2.excess == frozenset()


def test_json_round_trip(rng):
    for _ in range(20):
        d = random_restriction(rng, 10)
        assert Diagram.from_json(json.loads(json.dumps(d.to_json()))) == d


def test_dsl_parsing():
    d = parse_dsl("lambda=12,11,7,6,4,2,1; mu=11,9,6,3; X=2,4,5,7; "
                  "Y=4,6,7,8,9,10,11,12")
    assert len(d.cells) == 9 and not d.shifted
    d2 = parse_dsl("lambda=3,2,1; X=1..4")
    assert d2.shifted and len(d2.cells) == 6
    d3 = parse_dsl("lambda=3,2,1")
    assert d3.rows == tuple(range(1, 5)) and d3.shifted
    with pytest.raises(ValueError):
        parse_dsl("mu=1,2")


def test_non_shifted_input_rejected():
    # a diagonal pattern that cannot come from a shifted skew shape
    bad = Diagram((1, 2), (1, 2), frozenset({(1, 1), (2, 2)}))
    with pytest.raises(ValueError):
        rectangular_decomposition(bad)


def test_pool_decomposition_examples():
    k4 = restrict(build_shifted_skew((3, 2, 1)), (1, 2, 3, 4))
    pa = pool_decomposition(k4)
    assert not pa.contractible and pa.rectangularity == 1 and pa.s_count == 3
    # consumed row labels reappear as empty columns in the two-sided walk,
    # but the pool walk keeps the single full rectangle
    lam41 = restrict(build_shifted_skew((4, 1)), (1, 2, 3, 4, 5))
    dec = rectangular_decomposition(lam41)
    assert dec.has_empty_rect()
    pa2 = pool_decomposition(lam41)
    assert not pa2.contractible and pa2.rectangularity == 1 and pa2.s_count == 1


def test_ascii_render():
    d = restrict(build_shifted_skew((2, 1)), (1, 2, 3))
    art = d.ascii()
    assert "X" in art and art.count("\n") == 3


def test_staircase_field_convention():
    # pedestal: count within the piece's own label set
    k4 = restrict(build_shifted_skew((3, 2, 1)), (1, 2, 3, 4))
    assert rectangular_decomposition(k4).staircase_nonexcess == 3
    # walks made of full rectangles report a single sphere
    one = restrict(build_shifted_skew((1,)), (1, 2))
    assert rectangular_decomposition(one).staircase_nonexcess == 1
    lam41 = restrict(build_shifted_skew((4, 1)), (1, 2, 3, 4, 5))
    assert rectangular_decomposition(lam41).staircase_nonexcess == 1
    # an isolated label means a contractible complex: 0
    iso = restrict(build_shifted_skew((3, 2, 1)), (1, 2, 3, 4, 9))
    assert rectangular_decomposition(iso).staircase_nonexcess == 0
    # non-shifted diagrams always report 0
    bip = restrict(build_shifted_skew((3, 2, 1)), (1, 2, 3), (2, 3, 4))
    assert rectangular_decomposition(bip).staircase_nonexcess == 0
