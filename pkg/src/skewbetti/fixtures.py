"""Bundled reference fixtures and the checks behind ``reproduce-paper``.

Each fixture file under ``fixtures/`` carries an input and its expected
reference values; ``run_all`` replays every check and reports one
pass/fail line per named expectation.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from . import bounds, diagrams, hypergraphs, simplicial, skew


def fixtures_dir() -> Path:
    env = os.environ.get("SKEWBETTI_FIXTURES")
    if env:
        return Path(env)
    here = Path(__file__).resolve()
    for base in [here.parents[2], *here.parents]:
        cand = base / "fixtures"
        if cand.is_dir():
            return cand
    raise FileNotFoundError("fixtures directory not found; set SKEWBETTI_FIXTURES")


def load_fixture(name: str) -> dict:
    path = fixtures_dir() / f"{name}.json"
    with open(path) as fh:
        return json.load(fh)


def fixture_names() -> list[str]:
    return sorted(p.stem for p in fixtures_dir().glob("*.json"))


@dataclass
class CheckResult:
    fixture: str
    check: str
    passed: bool
    detail: str = ""


def _cells(pairs) -> list[tuple[int, int]]:
    return sorted((r, c) for r, c in pairs)


def _check(results, fixture, name, ok, detail=""):
    results.append(CheckResult(fixture, name, bool(ok), detail))


def _run_shape(name, data, results):
    shape = diagrams.build_shifted_skew(tuple(data["lambda"]), tuple(data["mu"]))
    got = sorted(shape.staircase_cells())
    want = _cells(data["expected_staircase"])
    _check(results, name, "staircase-cells", got == want, f"{got}")


def _run_restriction(name, data, results):
    shape = diagrams.build_shifted_skew(tuple(data["lambda"]), tuple(data.get("mu", ())))
    if data["kind"] == "restriction-shifted":
        d = diagrams.restrict(shape, data["X"])
    else:
        d = diagrams.restrict(shape, data["X"], data["Y"])
    got = _cells(d.cells)
    _check(results, name, "cells", got == _cells(data["expected_cells"]), f"{got}")
    if "expected_decomposition" in data:
        _check_decomposition(name, d, data["expected_decomposition"], results)
    if "expected_pedestal_pattern" in data:
        _check(results, name, "pedestal-pattern",
               diagrams.has_pedestal_pattern(d) == data["expected_pedestal_pattern"])


def _check_decomposition(name, d, expected, results):
    dec = diagrams.rectangular_decomposition(d)
    got_pieces = [{"kind": p.kind, "rows": list(p.rows), "cols": list(p.cols)}
                  for p in dec.pieces]
    want_pieces = [{"kind": p["kind"], "rows": p["rows"], "cols": p["cols"]}
                   for p in expected["pieces"]]
    _check(results, name, "pieces", got_pieces == want_pieces, f"{got_pieces}")
    _check(results, name, "rectangularity",
           dec.rectangularity == expected["rectangularity"], str(dec.rectangularity))
    _check(results, name, "spherical", dec.spherical == expected["spherical"])
    if "excess" in expected:
        _check(results, name, "excess",
               _cells(dec.excess) == _cells(expected["excess"]), f"{sorted(dec.excess)}")
    if "excess_count" in expected:
        _check(results, name, "excess-count",
               len(dec.excess) == expected["excess_count"], str(len(dec.excess)))


def _run_decomposition(name, data, results):
    d = diagrams.Diagram.from_json(data["diagram"])
    _check_decomposition(name, d, data["expected_decomposition"], results)
    if "expected_regularity" in data:
        rep = skew.regularity_and_pd(d)
        _check(results, name, "regularity",
               rep.regularity == data["expected_regularity"], str(rep.regularity))


def _run_six_cycle(name, data, results):
    g = simplicial.BipartiteGraph((1, 2, 3), (1, 2, 3),
                                  frozenset((x, y) for x, y in data["edges"]))
    cx = simplicial.independence_complex(g.to_simple())
    got_facets = sorted(sorted(f"{t}{l}" for (t, l) in f) for f in cx.facets)
    want_facets = sorted(sorted(f) for f in data["expected_facets"])
    _check(results, name, "independence-facets", got_facets == want_facets)
    prof = simplicial.reduced_homology(cx)
    want_h = {int(k): v for k, v in data["expected_homology"].items()}
    _check(results, name, "wedge-homology",
           prof.nonzero() == want_h and prof.nonzero(2) == want_h, f"{prof.nonzero()}")
    supports = [frozenset({simplicial.x_vertex(x), simplicial.y_vertex(y)})
                for (x, y) in g.edges]
    tables = simplicial.hochster_betti_table(supports, g.vertices(), primes=(2,))
    for fld in ("Q", "F2"):
        _check(results, name, f"totals-{fld}",
               tables[fld].totals() == tuple(data["expected_totals"]),
               f"{tables[fld].totals()}")
    strands = {str(s): {str(i): v for i, v in row.items()}
               for s, row in tables["Q"].strands().items()}
    _check(results, name, "strands", strands == data["expected_strands"], f"{strands}")
    rep = bounds.check_bipartite_conjecture(g)
    want = data["expected_lower_strict"]
    entry = [e for e in rep.entries
             if e.i == want["i"] and e.xset == tuple(g.xs)]
    ok = entry and entry[0].lower == want["lower"] \
        and entry[0].values["Q"] == want["value"]
    _check(results, name, "lower-bound-strict", ok,
           f"{entry[0].lower if entry else None} < {entry[0].values if entry else None}")
    cls = bounds.classify_bipartite(g)
    _check(results, name, "not-nearly-row-nested",
           cls.nearly_row_nested == data["expected_nearly_row_nested"])


def _run_supports(name, data, results):
    supports = [frozenset(s) for s in data["supports"]]
    verts = sorted({v for s in supports for v in s})
    tables = simplicial.hochster_betti_table(supports, verts, primes=(2,))
    for fld in ("Q", "F2"):
        _check(results, name, f"totals-{fld}",
               tables[fld].totals() == tuple(data["expected_totals"]),
               f"{tables[fld].totals()}")
    strands = {str(s): {str(i): v for i, v in row.items()}
               for s, row in tables["Q"].strands().items()}
    _check(results, name, "strands", strands == data["expected_strands"], f"{strands}")


def _run_colex_counterexample(name, data, results):
    fam = hypergraphs.UniformFamily.from_members(data["members"], d=data["d"])
    rep = bounds.check_colex_lower_bound(fam)
    _check(results, name, "totals", rep.betti["Q"] == tuple(data["expected_totals"]),
           f"{rep.betti['Q']}")
    _check(results, name, "bound", rep.bound == tuple(data["expected_bound"]),
           f"{rep.bound}")
    got = sorted({i for (_fld, i) in rep.violations})
    _check(results, name, "violations",
           rep.verdict == "violated" and got == data["expected_violations"], f"{got}")


def _run_stable_family(name, data, results):
    fam = hypergraphs.UniformFamily.from_members(data["members"], d=data["d"])
    _check(results, name, "strongly-stable",
           hypergraphs.stability_check(fam).strongly_stable == data["expected_stable"])
    dep = hypergraphs.depolarize(fam)
    _check(results, name, "depolarization",
           sorted(dep.members) == sorted(map(tuple, data["expected_depolarization"])),
           f"{dep.members}")
    fk = hypergraphs.partite_expansion(fam)
    fm = hypergraphs.partite_expansion(dep)
    _check(results, name, "generators-sets",
           sorted(hypergraphs.partite_generators(fk)) ==
           sorted(data["expected_generators_sets"]))
    _check(results, name, "generators-multisets",
           sorted(hypergraphs.partite_generators(fm)) ==
           sorted(data["expected_generators_multisets"]))
    bk = hypergraphs.complex_of_boxes(fk)
    bm = hypergraphs.complex_of_boxes(fm)
    fv = tuple(data["expected_f_vector"])
    _check(results, name, "f-vector-sets", bk.f_vector() == fv, f"{bk.f_vector()}")
    _check(results, name, "f-vector-multisets", bm.f_vector() == fv, f"{bm.f_vector()}")
    rep = hypergraphs.verify_cellular_resolution(bk)
    _check(results, name, "resolution",
           rep.is_resolution == data["expected_resolution"]["is_resolution"]
           and rep.is_minimal == data["expected_resolution"]["is_minimal"])
    closed = hypergraphs.closed_betti_formulas(fam).vector
    _check(results, name, "closed-betti", closed == tuple(data["expected_betti"]),
           f"{closed}")
    colex = hypergraphs.colex_closed_form(data["colex_equivalent"]["g"],
                                          data["colex_equivalent"]["d"])
    _check(results, name, "colex-closed-form", colex == tuple(data["expected_betti"]),
           f"{colex}")
    oracle = simplicial.hochster_betti_table(fam.supports_as_sets(), fam.support(),
                                             primes=(2,))
    _check(results, name, "oracle", oracle["Q"].totals() == tuple(data["expected_betti"])
           and oracle["F2"].totals() == tuple(data["expected_betti"]),
           f"{oracle['Q'].totals()}")


def _run_unstable_family(name, data, results):
    fam = hypergraphs.UniformFamily.from_members(data["members"], d=data["d"])
    rep = hypergraphs.stability_check(fam)
    _check(results, name, "not-strongly-stable",
           rep.strongly_stable == data["expected_stable"]
           and rep.witness == (tuple(data["expected_witness_member"]),
                               tuple(data["expected_witness_missing"])),
           f"{rep.witness}")
    bc = hypergraphs.complex_of_boxes(hypergraphs.partite_expansion(fam),
                                      hypergraphs.SPECIALIZED)
    _check(results, name, "f-vector", bc.f_vector() == tuple(data["expected_f_vector"]),
           f"{bc.f_vector()}")
    res = hypergraphs.verify_cellular_resolution(bc)
    want_fail = tuple(sorted((int(k), v)
                             for k, v in data["expected_failing_multidegree"].items()))
    _check(results, name, "resolution-fails",
           res.is_resolution == data["expected_resolution"]
           and res.failing_multidegree == want_fail,
           f"{res.failing_multidegree}")
    oracle = simplicial.hochster_betti_table(fam.supports_as_sets(), fam.support(),
                                             primes=(2,))
    _check(results, name, "projective-dimension",
           oracle["Q"].projective_dimension() == data["expected_projective_dimension"],
           f"{oracle['Q'].projective_dimension()}")


def _run_ferrers_rook(name, data, results):
    a = skew.FerrersShape(tuple(data["shape"]))
    b = skew.FerrersShape(tuple(data["other"]))
    fb = skew.ferrers_betti(a)
    want_alpha = {int(k): v for k, v in data["expected_alpha"].items()}
    _check(results, name, "alpha-profile", fb.alpha_profile == want_alpha,
           f"{fb.alpha_profile}")
    _check(results, name, "formulas-agree", fb.consistent,
           f"{fb.formulas}")
    _check(results, name, "betti", fb.coarse == tuple(data["expected_betti"]),
           f"{fb.coarse}")
    oracle = simplicial.hochster_betti_table(
        skew.bipartite_supports(a.to_diagram()),
        [simplicial.x_vertex(x) for x in a.to_diagram().rows]
        + [simplicial.y_vertex(y) for y in a.to_diagram().cols], primes=(2,))
    _check(results, name, "oracle", oracle["Q"].totals() == tuple(data["expected_betti"]),
           f"{oracle['Q'].totals()}")
    rook = skew.rook_tools(a, b)
    _check(results, name, "rook-equivalence",
           rook.consistent and rook.rook_equal == data["expected_equal"],
           f"{rook.rook_counts_a} vs {rook.rook_counts_b}")


def _run_colex_forms(name, data, results):
    for case in data["cases"]:
        got = hypergraphs.colex_closed_form(case["g"], case["d"])
        _check(results, name, f"closed-form-g{case['g']}d{case['d']}",
               got == tuple(case["expected"]), f"{got}")
    pre = data["order_prefix"]
    got = hypergraphs.colexsegment(pre["count"], pre["d"]).members
    _check(results, name, "order-prefix",
           list(map(list, got)) == pre["expected"], f"{got}")
    tp = data["taylor_path"]
    rep = simplicial.taylor_analysis([set(g) for g in tp["generators"]])
    _check(results, name, "taylor-path-not-minimal",
           rep.minimal == tp["expected_minimal"]
           and rep.star_components == tp["expected_minimal"])


_RUNNERS = {
    "shape": _run_shape,
    "restriction": _run_restriction,
    "restriction-shifted": _run_restriction,
    "decomposition": _run_decomposition,
    "six-cycle": _run_six_cycle,
    "supports": _run_supports,
    "colex-counterexample": _run_colex_counterexample,
    "stable-family": _run_stable_family,
    "unstable-family": _run_unstable_family,
    "ferrers-rook": _run_ferrers_rook,
    "colex-forms": _run_colex_forms,
}


def run_fixture(name: str) -> list[CheckResult]:
    data = load_fixture(name)
    results: list[CheckResult] = []
    runner = _RUNNERS.get(data.get("kind"))
    if runner is None:
        raise ValueError(f"fixture {name} has unknown kind {data.get('kind')!r}")
    runner(name, data, results)
    return results


def run_all() -> list[CheckResult]:
    out: list[CheckResult] = []
    for name in fixture_names():
        out.extend(run_fixture(name))
    return out
