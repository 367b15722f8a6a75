"""Command-line driver.

Exit codes: 0 success, 1 verdict false (``check``), 2 usage or input
error, 3 theorem violation (``verify``/``scan``), 4 size cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .betti import DEFAULT_MAX_GENS, has_linear_resolution, multigraded_betti
from .errors import CapExceededError, MatchpowError
from .formats import ideal_to_json_obj, ideal_to_text, parse_graph_json, parse_ideal
from .graphs import (
    EdgeWeightedGraph,
    WeightedOrientedGraph,
    block_structure,
    edge_ideal,
    edge_weighted_ideal,
    induced_matching_number,
    longest_induced_path,
    matching_number,
    oriented_edge_ideal,
    weighted_induced_matching_number,
)
from .linalg import CoefficientField
from .matching import matching_power, monomial_grade
from .monomials import format_monomial
from .structure import has_linear_quotients, is_linearly_related, is_matroidal, is_polymatroidal
from .verify import FAMILIES, FamilySpec, reproduce_examples, scan, verify_core, verify_graph, verify_linearity

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_VIOLATION, EXIT_CAP = 0, 1, 2, 3, 4
DEFAULT_MAX_VARS = 32
NO_RESULTS = "no results"
SCAN_MAX_GENS = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _cap(args, default=DEFAULT_MAX_GENS):
    return default if args.max_gens is None else args.max_gens


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_ideal(args):
    I = parse_ideal(_read(args.ideal)).ideal
    if I.n > args.max_vars:
        raise CapExceededError("number of variables", I.n, args.max_vars)
    return I


def _load_graph(args, path):
    G = parse_graph_json(_read(path), repair=getattr(args, "repair_weights", False))
    verts = G.graph.vertices if isinstance(G, EdgeWeightedGraph) else G.vertices
    if len(verts) > args.max_vars:
        raise CapExceededError("number of vertices", len(verts), args.max_vars)
    return G


def _emit(args, obj, text: str):
    if args.json:
        print(json.dumps({"schema": 1, **obj}))
    else:
        print(text)


# -- verbs ----------------------------------------------------------------------

def cmd_power(args):
    I = _load_ideal(args)
    ks = range(1, monomial_grade(I) + 1) if args.all_powers else [args.k]
    if args.k is None and not args.all_powers:
        raise ValueError("give -k K or --all-powers")
    powers = {k: matching_power(I, k) for k in ks}
    if args.json:
        _emit(args, {"powers": {str(k): ideal_to_json_obj(J) for k, J in powers.items()}}, "")
        return EXIT_OK
    if not powers:
        print(f"{NO_RESULTS} (zero ideal)")
    for k, J in powers.items():
        if args.all_powers:
            print(f"# k = {k}")
        print(ideal_to_text(J).rstrip() if not J.is_zero() else f"{NO_RESULTS} (matching power is zero)")
    return EXIT_OK


def cmd_grade(args):
    I = _load_ideal(args)
    nu = monomial_grade(I)
    _emit(args, {"nu": nu}, str(nu))
    return EXIT_OK


def cmd_betti(args):
    I = _load_ideal(args)
    field = CoefficientField.parse(args.field)
    if I.is_zero():
        _emit(args, {"graded": [], "field": str(field)}, f"{NO_RESULTS} (zero ideal)")
        return EXIT_OK
    B = multigraded_betti(I, field, _cap(args))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            csv.writer(fh).writerows(B.csv_rows())
    if args.json:
        obj = {"field": str(field), "graded": [[i, j, v] for (i, j), v in B.graded.items()]}
        if args.multigraded:
            obj["multigraded"] = [[i, list(a), v] for (i, a), v in sorted(B.multigraded.items())]
        _emit(args, obj, "")
        return EXIT_OK
    print(B.listing())
    print()
    print(B.diagram())
    if args.multigraded:
        print()
        names = I.ambient.var_names
        for (i, a), v in sorted(B.multigraded.items()):
            print(f"{i} {format_monomial(a, names)} {v}")
    return EXIT_OK


_TESTS = ("polymatroidal", "matroidal", "linquot", "linres", "linrel")


def cmd_check(args):
    I = _load_ideal(args)
    if I.is_zero():
        raise ValueError("structure tests need a nonzero ideal")
    witness = None
    if args.test == "polymatroidal":
        holds, witness = is_polymatroidal(I)
    elif args.test == "matroidal":
        holds, witness = is_matroidal(I)
    elif args.test == "linquot":
        holds, witness = has_linear_quotients(I)
    elif args.test == "linrel":
        holds, witness = is_linearly_related(I)
    else:
        holds = has_linear_resolution(I, CoefficientField.parse(args.field), _cap(args))
        if args.witness:
            witness = {f"{i},{j}": v for (i, j), v in multigraded_betti(I, CoefficientField.parse(args.field),
                                                                        _cap(args)).graded.items()}
    names = I.ambient.var_names

    def show(w):
        # monomials print in the text format, variable indices by name
        if w is None or isinstance(w, dict):
            return w
        if isinstance(w, tuple) and w and isinstance(w[0], int):
            return format_monomial(w, names)
        return [names[x] if isinstance(x, int) else show(x) for x in w]

    wit = show(witness) if args.witness else None
    if args.json:
        _emit(args, {"test": args.test, "holds": holds, "witness": wit}, "")
    else:
        print(f"{args.test}: {'true' if holds else 'false'}")
        if args.witness:
            print(f"witness: {json.dumps(wit) if wit is not None else NO_RESULTS}")
    return EXIT_OK if holds else EXIT_FALSE


def cmd_graph(args):
    G = _load_graph(args, args.graph)
    if isinstance(G, WeightedOrientedGraph):
        simple = G.underlying()
    elif isinstance(G, EdgeWeightedGraph):
        simple = G.graph
    else:
        simple = G
    what = args.what
    if what == "ideal":
        if isinstance(G, WeightedOrientedGraph):
            I = oriented_edge_ideal(G)
        elif isinstance(G, EdgeWeightedGraph):
            I = edge_weighted_ideal(G)
        else:
            I = edge_ideal(G)
        _emit(args, {"ideal": ideal_to_json_obj(I)}, ideal_to_text(I).rstrip())
    elif what == "nu":
        v = matching_number(simple)
        _emit(args, {"nu": v}, str(v))
    elif what == "im":
        v = induced_matching_number(simple)
        _emit(args, {"im": v}, str(v))
    elif what == "wim":
        if not isinstance(G, WeightedOrientedGraph):
            raise ValueError("wim needs a weighted oriented graph (\"directed\": true)")
        v = weighted_induced_matching_number(G)
        _emit(args, {"wim": v}, str(v))
    elif what == "lpath":
        v = longest_induced_path(simple)
        _emit(args, {"lpath_edges": v}, str(v))
    else:
        bs = block_structure(simple)
        rows = [{"vertices": sorted(b.vertices, key=simple.pos.__getitem__), "kind": b.kind} for b in bs.blocks]
        text = "\n".join(f"{r['kind']}: {' '.join(map(str, r['vertices']))}" for r in rows) or NO_RESULTS
        _emit(args, {"blocks": rows, "has_even_cycle": bs.has_even_cycle}, text)
    return EXIT_OK


def _print_reports(args, reports):
    if not reports:
        print(NO_RESULTS)
    failed = False
    for r in reports:
        failed |= r.is_failure
        if args.json:
            print(json.dumps(r.to_json_obj()))
            continue
        if r.is_warning:
            tag = "WARN"
        elif r.is_failure:
            tag = "FAIL"
        else:
            tag = {"holds": "OK", "violated": "FAIL", "hypothesis-not-met": "SKIP"}[r.verdict]
        k = r.instance.get("k")
        extra = f" k={k}" if k is not None else ""
        note = f"  ({r.note})" if r.note else ""
        print(f"{tag:<5}{r.check_id}{extra} {json.dumps(r.witness)}{note}")
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_verify(args):
    field = CoefficientField.parse(args.field)
    if args.what == "examples":
        return _print_reports(args, reproduce_examples(field))
    if args.input is None:
        raise ValueError(f"verify {args.what} needs --input FILE")
    if args.what == "core":
        I = _load_ideal(argparse.Namespace(ideal=args.input, max_vars=args.max_vars))
        return _print_reports(args, verify_core(I, field, _cap(args)))
    D = _load_graph(args, args.input)
    if not isinstance(D, WeightedOrientedGraph):
        raise ValueError("verify graph/linearity needs a weighted oriented graph (\"directed\": true)")
    ks = [args.k] if args.k is not None else range(1, matching_number(D.underlying()) + 1)
    check = verify_graph if args.what == "graph" else verify_linearity
    reports = []
    for k in ks:
        reports.extend(check(D, k, field, _cap(args)))
    return _print_reports(args, reports)


def cmd_scan(args):
    spec = FamilySpec(args.family, max_n=args.max_n, count=args.count, seed=args.seed,
                      betti_max_gens=_cap(args, SCAN_MAX_GENS))
    summary = scan(spec, args.out, CoefficientField.parse(args.field))
    obj = summary.to_json_obj()
    if args.json:
        print(json.dumps(obj))
    else:
        print(f"family {spec.family}  instances {summary.instances}  "
              f"failures {len(summary.failures)}  warnings {len(summary.warnings)}  {obj['seconds']}s")
        if not obj["checks"]:
            print(NO_RESULTS)
        width = max((len(c) for c in obj["checks"]), default=0)
        for cid, verdicts in obj["checks"].items():
            counts = "  ".join(f"{v}={n}" for v, n in sorted(verdicts.items()))
            print(f"  {cid:<{width}}  {counts}")
        for r in summary.warnings[:20]:
            print(f"WARN {r.check_id} {json.dumps(r.witness)}")
        for r in summary.failures[:20]:
            print(f"FAIL {r.check_id} {json.dumps(r.witness)}")
    return EXIT_VIOLATION if summary.failures else EXIT_OK


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-gens", type=int, help=f"generator cap for Betti numbers (default {DEFAULT_MAX_GENS}, "
                        f"{SCAN_MAX_GENS} for scan)")
    common.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS, help="variable / vertex cap on inputs")
    common.add_argument("--field", default="q", help="coefficient field: q (rationals) or fp:P")

    p = _Parser(prog="matchpow", description="Matching powers of monomial ideals.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("power", parents=[common], help="generators of I^[k]")
    s.add_argument("--ideal", required=True)
    s.add_argument("-k", type=int)
    s.add_argument("--all-powers", action="store_true")
    s.set_defaults(func=cmd_power)

    s = sub.add_parser("grade", parents=[common], help="monomial grade nu(I)")
    s.add_argument("--ideal", required=True)
    s.set_defaults(func=cmd_grade)

    s = sub.add_parser("betti", parents=[common], help="graded Betti numbers")
    s.add_argument("--ideal", required=True)
    s.add_argument("--multigraded", action="store_true")
    s.add_argument("--csv", metavar="PATH")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("check", parents=[common], help="structure tests")
    s.add_argument("--ideal", required=True)
    s.add_argument("--test", required=True, choices=_TESTS)
    s.add_argument("--witness", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("graph", parents=[common], help="graph ideals and invariants")
    s.add_argument("what", choices=("ideal", "nu", "im", "wim", "blocks", "lpath"))
    s.add_argument("--graph", required=True)
    s.add_argument("--repair-weights", action="store_true", help="reset source weights to 1")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("verify", parents=[common], help="check the theory on one instance")
    s.add_argument("what", choices=("core", "graph", "linearity", "examples"))
    s.add_argument("--input")
    s.add_argument("-k", type=int)
    s.add_argument("--repair-weights", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", parents=[common], help="run checks over a family")
    s.add_argument("--family", required=True, choices=FAMILIES)
    s.add_argument("--max-n", type=int, default=6)
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", metavar="DIR")
    s.set_defaults(func=cmd_scan)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (MatchpowError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
