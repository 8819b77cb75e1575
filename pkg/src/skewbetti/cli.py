"""Command-line interface.

Every operation of the library is reachable through a subcommand; inputs
come from the compact diagram DSL, JSON files, or the bundled fixtures, and
reports are emitted as JSON, TSV, or text, optionally with a rendered
figure alongside.

Exit codes: 0 all requested checks pass; 1 a check failed; 2 parse error;
3 precondition violation; 4 oracle size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import bounds, diagrams, fixtures, hypergraphs, simplicial, skew

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_ORACLE_LIMIT = 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _emit(args, payload: dict, text: str | None = None, tsv: str | None = None):
    fmt = getattr(args, "format", "json") or "json"
    if fmt == "json":
        out = json.dumps(payload, indent=2, default=str)
    elif fmt == "tsv" and tsv is not None:
        out = tsv
    elif fmt == "text" and text is not None:
        out = text
    else:
        out = json.dumps(payload, indent=2, default=str)
    dest = getattr(args, "output", None)
    if dest:
        with open(dest, "w") as fh:
            fh.write(out if out.endswith("\n") else out + "\n")
    else:
        print(out)


def _load_diagram(args) -> diagrams.Diagram:
    sources = [bool(getattr(args, "dsl", None)), bool(getattr(args, "json", None)),
               bool(getattr(args, "fixture", None))]
    if sum(sources) != 1:
        raise CliError("exactly one of --dsl / --json / --fixture is required",
                       EXIT_PARSE)
    if args.dsl:
        return diagrams.parse_dsl(args.dsl)
    if args.json:
        return diagrams.diagram_from_file(args.json)
    data = fixtures.load_fixture(args.fixture)
    if "diagram" in data:
        return diagrams.Diagram.from_json(data["diagram"])
    if data.get("kind", "").startswith("restriction") or data.get("kind") == "shape":
        shape = diagrams.build_shifted_skew(tuple(data["lambda"]),
                                            tuple(data.get("mu", ())))
        if "Y" in data:
            return diagrams.restrict(shape, data["X"], data["Y"])
        if "X" in data:
            return diagrams.restrict(shape, data["X"])
        n = len(data["lambda"]) + data["lambda"][0]
        return diagrams.restrict(shape, range(1, n + 1))
    raise CliError(f"fixture {args.fixture} does not define a diagram", EXIT_PARSE)


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    """Edges like '12,23,34' (digit pairs) or '1-2,2-3' or '10-3,...'."""
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if "-" in token:
            a, _, b = token.partition("-")
            out.append((int(a), int(b)))
        elif len(token) == 2 and token.isdigit():
            out.append((int(token[0]), int(token[1])))
        else:
            raise CliError(f"cannot parse edge {token!r}", EXIT_PARSE)
    return out


def _parse_members(text: str) -> list[tuple[int, ...]]:
    """Members like '123,124' (digit strings) or '1.2.3,1.2.4'."""
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if "." in token:
            out.append(tuple(int(p) for p in token.split(".")))
        elif token.isdigit():
            out.append(tuple(int(ch) for ch in token))
        else:
            raise CliError(f"cannot parse member {token!r}", EXIT_PARSE)
    return out


def _parse_biadjacency(text: str) -> bounds.BipartiteGraph:
    rows = [row.strip() for row in text.split(";") if row.strip()]
    matrix = [[int(ch) for ch in row] for row in rows]
    if len({len(r) for r in matrix}) > 1:
        raise CliError("ragged biadjacency matrix", EXIT_PARSE)
    return simplicial.BipartiteGraph.from_biadjacency(matrix)


def _primes(args) -> tuple[int, ...]:
    fields = getattr(args, "field", None) or ["Q", "F2"]
    primes = []
    for f in fields:
        if f == "Q":
            continue
        if not f.startswith("F") or not f[1:].isdigit():
            raise CliError(f"unknown field {f!r}", EXIT_PARSE)
        primes.append(int(f[1:]))
    return tuple(primes) or (2,)


def _table_payload(table: simplicial.BettiTable) -> dict:
    return {"totals": list(table.totals()),
            "strands": {str(s): {str(i): v for i, v in sorted(row.items())}
                        for s, row in sorted(table.strands().items())},
            "table": table.to_json()}


# ---------------------------------------------------------------------------
# Subcommands


def cmd_decompose(args) -> int:
    d = _load_diagram(args)
    dec = diagrams.rectangular_decomposition(d)
    payload = {"diagram": d.to_json(), "decomposition": dec.to_json(),
               "pedestal_pattern": diagrams.has_pedestal_pattern(d)}
    if d.cells:
        rep = skew.regularity_and_pd(d)
        payload["regularity"] = rep.regularity
        payload["projective_dimension"] = rep.projective_dimension
        kr = skew.krull_dimension(skew.bipartite_graph_of(d))
        payload["krull"] = {"alpha": kr.alpha, "nu": kr.nu, "tau": kr.tau,
                            "rho": kr.rho, "has_isolated": kr.has_isolated}
    lines = [d.ascii(), ""]
    for p in dec.pieces:
        lines.append(f"{p.kind:9s} rows={list(p.rows)} cols={list(p.cols)}")
    lines.append(f"excess: {sorted(dec.excess)}")
    lines.append(f"rectangularity: {dec.rectangularity}  spherical: {dec.spherical}"
                 f"  staircase: {dec.staircase_nonexcess}")
    if "regularity" in payload:
        lines.append(f"regularity: {payload['regularity']}  projective dimension: "
                     f"{payload['projective_dimension']}  "
                     f"Krull alpha: {payload['krull']['alpha']}")
    tsv = "\n".join("\t".join([p.kind, ",".join(map(str, p.rows)),
                               ",".join(map(str, p.cols))]) for p in dec.pieces)
    _emit(args, payload, "\n".join(lines), tsv + "\n")
    return EXIT_OK


def cmd_betti(args) -> int:
    primes = _primes(args)
    if args.variant == "bip":
        d = _load_diagram(args)
        closed = skew.betti_bipartite_closed(d)
        payload = {"diagram": d.to_json(), "closed": _table_payload(closed)}
        code = EXIT_OK
        if args.check_oracle:
            verts = ([simplicial.x_vertex(x) for x in d.rows]
                     + [simplicial.y_vertex(y) for y in d.cols])
            tables = simplicial.hochster_betti_table(
                skew.bipartite_supports(d), verts, primes=primes,
                max_vertices=args.max_vertices)
            agree = all(t == closed for t in tables.values())
            payload["oracle"] = {f: _table_payload(t) for f, t in tables.items()}
            payload["oracle_agrees"] = agree
            code = EXIT_OK if agree else EXIT_CHECK_FAILED
        _emit(args, payload, tsv=closed.to_tsv())
        if args.plot:
            from . import plots
            plots.betti_heatmap(closed, args.plot)
        return code
    if args.variant == "nonbip":
        if args.fixture:
            data = fixtures.load_fixture(args.fixture)
            if "supports" in data:
                supports = [frozenset(s) for s in data["supports"]]
                verts = sorted({v for s in supports for v in s})
                tables = simplicial.hochster_betti_table(
                    supports, verts, primes=primes, max_vertices=args.max_vertices)
                payload = {"fixture": args.fixture, "mode": "oracle",
                           "tables": {f: _table_payload(t) for f, t in tables.items()}}
                _emit(args, payload, tsv=tables["Q"].to_tsv())
                if args.plot:
                    from . import plots
                    plots.betti_heatmap(tables["Q"], args.plot)
                return EXIT_OK
        d = _load_diagram(args)
        if not d.shifted:
            raise CliError("nonbipartite Betti numbers need a shifted diagram "
                           "(DSL without Y)", EXIT_PRECONDITION)
        if args.mode == "oracle":
            tables = simplicial.hochster_betti_table(
                skew.nonbipartite_supports(d), d.rows, primes=primes,
                max_vertices=args.max_vertices)
            table = tables["Q"]
            payload = {"diagram": d.to_json(), "mode": "oracle",
                       "tables": {f: _table_payload(t) for f, t in tables.items()}}
        else:
            table = skew.betti_nonbipartite(d, args.mode)
            payload = {"diagram": d.to_json(), "mode": args.mode,
                       "closed": _table_payload(table)}
            if args.mode == "direct":
                payload["note"] = "experimental staircase route; " \
                    "specialize is the reference"
        _emit(args, payload, tsv=table.to_tsv())
        if args.plot:
            from . import plots
            plots.betti_heatmap(table, args.plot)
        return EXIT_OK
    if args.variant == "ferrers":
        shape = skew.FerrersShape(tuple(_parse_int_list(args.shape)))
        fb = skew.ferrers_betti(shape)
        payload = {"shape": list(shape.parts),
                   "alpha_profile": {str(k): v for k, v in fb.alpha_profile.items()},
                   "betti": list(fb.coarse),
                   "formulas": {k: list(v) for k, v in fb.formulas.items()},
                   "formulas_agree": fb.consistent}
        tsv = "i\t" + "\t".join(map(str, range(len(fb.coarse)))) + "\nbeta\t" + \
            "\t".join(map(str, fb.coarse)) + "\n"
        _emit(args, payload, tsv=tsv)
        if args.plot:
            from . import plots
            plots.betti_heatmap(fb.fine, args.plot, "Ferrers Betti table")
        return EXIT_OK if fb.consistent else EXIT_CHECK_FAILED
    if args.variant == "hypergraph":
        fam = _load_family(args)
        stab = hypergraphs.stability_check(fam)
        closed = hypergraphs.closed_betti_formulas(fam)
        payload = {"family": fam.to_json(), "betti": list(closed.vector),
                   "profile": {str(k): v for k, v in closed.profile.items()},
                   "strongly_stable": stab.strongly_stable}
        if fam.kind == hypergraphs.SETS:
            payload["depolarization"] = hypergraphs.depolarize(fam).to_json()
            payload["generators"] = hypergraphs.partite_generators(
                hypergraphs.partite_expansion(fam))
        code = EXIT_OK
        if args.check_oracle and fam.kind == hypergraphs.SETS:
            tables = simplicial.hochster_betti_table(
                fam.supports_as_sets(), fam.support(), primes=primes,
                max_vertices=args.max_vertices)
            payload["oracle"] = {f: list(t.totals()) for f, t in tables.items()}
            agree = all(t.totals() == closed.vector for t in tables.values())
            payload["oracle_agrees"] = agree
            code = EXIT_OK if agree else EXIT_CHECK_FAILED
        _emit(args, payload)
        return code
    raise CliError(f"unknown betti variant {args.variant!r}", EXIT_PARSE)


def _parse_int_list(text: str) -> list[int]:
    return [int(t) for t in text.replace(";", ",").split(",") if t.strip()]


def _load_family(args) -> hypergraphs.UniformFamily:
    if getattr(args, "colex", None):
        g, d = _parse_int_list(args.colex)
        return hypergraphs.colexsegment(g, d)
    if getattr(args, "members", None):
        members = _parse_members(args.members)
        kind = getattr(args, "kind", None) or hypergraphs.SETS
        return hypergraphs.UniformFamily.from_members(members, kind=kind,
                                                      d=getattr(args, "degree", None))
    if getattr(args, "json", None):
        with open(args.json) as fh:
            return hypergraphs.UniformFamily.from_json(json.load(fh))
    raise CliError("need --members, --colex, or --json", EXIT_PARSE)


def cmd_homology(args) -> int:
    if args.json:
        with open(args.json) as fh:
            data = json.load(fh)
        facets = [frozenset(map(_vertex_token, f)) for f in data["facets"]]
        verts = set().union(*facets) if facets else set()
        if "vertices" in data:
            verts = set(map(_vertex_token, data["vertices"]))
    elif args.facets:
        facets = []
        for chunk in args.facets.split(";"):
            chunk = chunk.strip()
            if chunk:
                facets.append(frozenset(_vertex_token(t) for t in chunk.split(",")))
        verts = set().union(*facets) if facets else set()
    else:
        raise CliError("need --facets or --json", EXIT_PARSE)
    cx = simplicial.SimplicialComplex.from_facets(verts, facets)
    prof = simplicial.reduced_homology(cx, primes=_primes(args))
    payload = {"facets": [sorted(map(str, f)) for f in cx.facets],
               "homology": prof.to_json()}
    if args.dual:
        dual = simplicial.alexander_dual(cx)
        payload["dual"] = {
            "facets": [sorted(map(str, f)) for f in dual.facets],
            "homology": simplicial.reduced_homology(dual,
                                                    primes=_primes(args)).to_json(),
        }
    _emit(args, payload)
    return EXIT_OK


def _vertex_token(tok):
    tok = str(tok).strip()
    return int(tok) if tok.lstrip("-").isdigit() else tok


def cmd_boxes(args) -> int:
    fam = _load_family(args)
    pf = hypergraphs.partite_expansion(fam)
    bc = hypergraphs.complex_of_boxes(pf, args.labeling)
    payload = {
        "family": fam.to_json(),
        "labeling": args.labeling,
        "f_vector": list(bc.f_vector()),
        "cells": [{"box": [list(side) for side in cell],
                   "dim": bc.dim(cell),
                   "label": [[list(v) if isinstance(v, tuple) else v, e]
                             for v, e in bc.label(cell)]}
                  for cell in bc.cells],
    }
    _emit(args, payload)
    return EXIT_OK


def cmd_verify_resolution(args) -> int:
    fam = _load_family(args)
    pf = hypergraphs.partite_expansion(fam)
    bc = hypergraphs.complex_of_boxes(pf, args.labeling)
    rep = hypergraphs.verify_cellular_resolution(bc, primes=_primes(args))
    payload = {"family": fam.to_json(), "labeling": args.labeling,
               "f_vector": list(bc.f_vector()),
               "is_resolution": rep.is_resolution,
               "is_minimal": rep.is_minimal,
               "failing_multidegree": [[str(v), e] for v, e in rep.failing_multidegree]
               if rep.failing_multidegree else None,
               "multidegrees_checked": rep.multidegrees_checked}
    _emit(args, payload)
    return EXIT_OK if rep.is_resolution else EXIT_CHECK_FAILED


def cmd_colex_check(args) -> int:
    if args.edges:
        fam = hypergraphs.UniformFamily.from_members(_parse_pairs(args.edges), d=2)
    else:
        fam = _load_family(args)
    rep = bounds.check_colex_lower_bound(fam, primes=_primes(args),
                                         max_vertices=args.max_vertices)
    taylor = simplicial.taylor_analysis([set(t) for t in fam.members])
    payload = {"family": fam.to_json(),
               "betti": {f: list(v) for f, v in rep.betti.items()},
               "bound": list(rep.bound), "verdict": rep.verdict,
               "violations": [[f, i] for f, i in rep.violations],
               "tight": rep.tight,
               "taylor": {"minimal": taylor.minimal,
                          "upper_bounds": list(taylor.upper_bounds)}}
    text = (f"betti {rep.betti}  bound {list(rep.bound)}\n"
            f"verdict: {rep.verdict.upper()}"
            + (f" at i={sorted({i for _, i in rep.violations})}"
               if rep.violations else ""))
    _emit(args, payload, text)
    return EXIT_OK if rep.verdict == "obeys" else EXIT_CHECK_FAILED


def _scan_one(payload):
    matrix, primes = payload
    g = simplicial.BipartiteGraph.from_biadjacency(matrix)
    return bounds.scan_record(g, primes)


def cmd_conjecture_scan(args) -> int:
    primes = _primes(args)
    graphs = []
    for m in range(1, args.max_x + 1):
        for n in range(1, args.max_y + 1):
            graphs.extend(bounds.enumerate_bipartite(
                m, n, no_isolated_x=not args.allow_isolated_x,
                no_isolated_y=args.no_isolated_y, connected=args.connected))
    jobs = [(g.biadjacency(), primes) for g in graphs]
    if args.width and args.width > 1:
        import multiprocessing
        with multiprocessing.Pool(args.width) as pool:
            records = pool.map(_scan_one, jobs)
    else:
        records = [_scan_one(j) for j in jobs]
    summary = {
        "graphs": len(records),
        "methods_agree": all(r["methods_agree"] for r in records),
        "lower_ok": all(r["verdicts"]["lower_ok"] for r in records),
        "upper_ok": all(r["verdicts"]["upper_ok"] for r in records),
        "lower_tightness_matches": all(r["tightness_matches_class"]["lower"]
                                       for r in records),
        "upper_tightness_matches": all(r["tightness_matches_class"]["upper"]
                                       for r in records),
        "fields_agree": all(r["fields_agree"] for r in records),
    }
    if args.jsonl:
        with open(args.jsonl, "w") as fh:
            for rec in records:
                fh.write(json.dumps(rec) + "\n")
    tsv_lines = ["biadjacency\tnearly_row_nested\thorizontal_vertical\t"
                 "lower_ok\tupper_ok\tlower_tight\tupper_tight"]
    for rec in records:
        bia = ";".join("".join(map(str, row)) for row in rec["biadjacency"])
        tsv_lines.append("\t".join([
            bia, str(rec["classes"]["nearly_row_nested"]),
            str(rec["classes"]["horizontal_vertical"]),
            str(rec["verdicts"]["lower_ok"]), str(rec["verdicts"]["upper_ok"]),
            str(rec["verdicts"]["lower_tight_all"]),
            str(rec["verdicts"]["upper_tight_all"])]))
    tsv = "\n".join(tsv_lines) + "\n"
    if args.plot:
        from . import plots
        plots.scan_figure(records, args.plot)
    _emit(args, {"summary": summary, "records": records}, tsv=tsv)
    ok = all(v for v in summary.values() if isinstance(v, bool))
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_classify(args) -> int:
    g = _parse_biadjacency(args.biadjacency)
    rep_d = bounds.classify_bipartite(g, "definition")
    rep_f = bounds.classify_bipartite(g, "forbidden")
    payload = {"biadjacency": g.biadjacency(),
               "definition": rep_d.flags(), "forbidden": rep_f.flags(),
               "witnesses": {k: [list(x) for x in v]
                             for k, v in rep_f.forbidden_witnesses.items()},
               "methods_agree": rep_d.flags() == rep_f.flags()}
    _emit(args, payload)
    return EXIT_OK if payload["methods_agree"] else EXIT_CHECK_FAILED


def cmd_reduce(args) -> int:
    g = _parse_biadjacency(args.biadjacency)
    reports = bounds.reductions(g, primes=_primes(args))
    payload = {"biadjacency": g.biadjacency(),
               "reductions": [{"kind": r.kind, "detail": list(r.detail),
                               "holds": r.holds, "checked": r.checked}
                              for r in reports]}
    _emit(args, payload)
    if not reports:
        raise CliError("no applicable reduction (need a full column or "
                       "nested rows)", EXIT_PRECONDITION)
    return EXIT_OK if all(r.holds for r in reports) else EXIT_CHECK_FAILED


def cmd_rook(args) -> int:
    a = skew.FerrersShape(tuple(_parse_int_list(args.shape)))
    b = skew.FerrersShape(tuple(_parse_int_list(args.other)))
    rep = skew.rook_tools(a, b, args.r_max)
    payload = {"shape": list(a.parts), "other": list(b.parts),
               "rook_counts": {"shape": list(rep.rook_counts_a),
                               "other": list(rep.rook_counts_b)},
               "rook_equal": rep.rook_equal, "alpha_equal": rep.alpha_equal,
               "betti_equal": rep.betti_equal, "consistent": rep.consistent}
    tsv = "r\t" + "\t".join(map(str, range(len(rep.rook_counts_a)))) + "\n" \
        + "shape\t" + "\t".join(map(str, rep.rook_counts_a)) + "\n" \
        + "other\t" + "\t".join(map(str, rep.rook_counts_b)) + "\n"
    if args.plot:
        from . import plots
        plots.rook_figure(rep, (str(a.parts), str(b.parts)), args.plot)
    _emit(args, payload, tsv=tsv)
    return EXIT_OK if rep.consistent else EXIT_CHECK_FAILED


def cmd_enumerate(args) -> int:
    graphs = bounds.enumerate_bipartite(args.m, args.n,
                                        no_isolated_x=args.no_isolated_x,
                                        no_isolated_y=args.no_isolated_y,
                                        connected=args.connected)
    payload = {"m": args.m, "n": args.n, "count": len(graphs),
               "graphs": [g.biadjacency() for g in graphs]}
    lines = [";".join("".join(map(str, row)) for row in g.biadjacency())
             for g in graphs]
    _emit(args, payload, "\n".join(lines), "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_reproduce_paper(args) -> int:
    results = fixtures.run_all()
    width = max(len(f"{r.fixture}:{r.check}") for r in results)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status}  {f'{r.fixture}:{r.check}'.ljust(width)}"
                     + (f"  {r.detail}" if (args.verbose or not r.passed) else ""))
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} fixture checks pass")
    print("\n".join(lines))
    if args.output:
        with open(args.output, "w") as fh:
            json.dump([asdict(r) for r in results], fh, indent=2)
    return EXIT_OK if passed == len(results) else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="skewbetti",
        description="Betti numbers of shifted-skew graph ideals and stable "
                    "hypergraph ideals, with exact homology cross-checks.")
    ap.add_argument("--seed", type=int, default=None,
                    help="seed for randomized property runs (printed when set)")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, diagram=False, family=False, plot=False):
        p.add_argument("--format", choices=["json", "tsv", "text"], default="json")
        p.add_argument("--output", help="write the report to a file")
        p.add_argument("--field", action="append",
                       help="coefficient field (Q, F2, F3, ...); repeatable")
        p.add_argument("--max-vertices", type=int, default=12,
                       help="oracle size guard (default 12)")
        p.add_argument("--width", type=int, default=1,
                       help="parallel worker count where supported")
        if diagram:
            p.add_argument("--dsl", help="diagram DSL, e.g. "
                           "'lambda=3,2,1; X=1..4'")
            p.add_argument("--json", help="diagram JSON file")
            p.add_argument("--fixture", help="bundled fixture name")
        if family:
            p.add_argument("--members", help="family members, e.g. '123,124'")
            p.add_argument("--colex", help="colexsegment spec 'g,d'")
            p.add_argument("--json", help="family JSON file")
            p.add_argument("--kind", choices=["sets", "multisets"], default="sets")
            p.add_argument("--degree", type=int, help="member degree d")
        if plot:
            p.add_argument("--plot", help="render a figure to this path")

    p = sub.add_parser("decompose", help="rectangular decomposition of a diagram")
    common(p, diagram=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("betti", help="Betti tables (closed form and oracle)")
    p.add_argument("variant", choices=["bip", "nonbip", "ferrers", "hypergraph"])
    common(p, diagram=True, plot=True)
    p.add_argument("--members", help="family members (hypergraph variant)")
    p.add_argument("--colex", help="colexsegment spec 'g,d'")
    p.add_argument("--kind", choices=["sets", "multisets"], default="sets")
    p.add_argument("--degree", type=int)
    p.add_argument("--shape", help="Ferrers partition, e.g. '4,4,2'")
    p.add_argument("--mode", choices=["specialize", "direct", "oracle"],
                   default="specialize", help="nonbipartite route")
    p.add_argument("--check-oracle", action="store_true",
                   help="cross-check the closed form against homology")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("homology", help="reduced homology of a complex")
    common(p)
    p.add_argument("--facets", help="semicolon-separated facets, e.g. '1,2;2,3'")
    p.add_argument("--json", help="complex JSON file with a 'facets' list")
    p.add_argument("--dual", action="store_true",
                   help="also report the Alexander dual and its homology")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("boxes", help="the complex of boxes of a family")
    common(p, family=True)
    p.add_argument("--labeling", choices=["partite", "specialized"],
                   default="partite")
    p.set_defaults(func=cmd_boxes)

    p = sub.add_parser("verify-resolution",
                       help="acyclicity/minimality of the box complex")
    common(p, family=True)
    p.add_argument("--labeling", choices=["partite", "specialized"],
                   default="partite")
    p.set_defaults(func=cmd_verify_resolution)

    p = sub.add_parser("colex-check", help="compare Betti numbers with the "
                                           "colexsegment lower bound")
    common(p, family=True)
    p.add_argument("--edges", help="graph edges, e.g. '12,23,34,45,15'")
    p.set_defaults(func=cmd_colex_check)

    p = sub.add_parser("conjecture-scan",
                       help="scan small bipartite graphs against the bounds")
    common(p, plot=True)
    p.add_argument("--max-x", type=int, default=3)
    p.add_argument("--max-y", type=int, default=3)
    p.add_argument("--allow-isolated-x", action="store_true")
    p.add_argument("--no-isolated-y", action="store_true")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--jsonl", help="write one JSON record per graph")
    p.set_defaults(func=cmd_conjecture_scan)

    p = sub.add_parser("classify", help="bipartite graph classification")
    common(p)
    p.add_argument("--biadjacency", required=True, help="rows of 0/1, e.g. "
                   "'110;011'")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reduce", help="verify reduction identities by oracle")
    common(p)
    p.add_argument("--biadjacency", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("rook", help="rook equivalence of two Ferrers boards")
    common(p, plot=True)
    p.add_argument("--shape", required=True)
    p.add_argument("--other", required=True)
    p.add_argument("--r-max", type=int, default=None)
    p.set_defaults(func=cmd_rook)

    p = sub.add_parser("enumerate", help="bipartite graphs up to isomorphism")
    common(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--no-isolated-x", action="store_true")
    p.add_argument("--no-isolated-y", action="store_true")
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("reproduce-paper",
                       help="replay the bundled reference fixtures")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--output", help="write results as JSON")
    p.set_defaults(func=cmd_reproduce_paper)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.seed is not None:
        print(f"seed: {args.seed}", file=sys.stderr)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except simplicial.OracleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE_LIMIT
    except (ValueError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
