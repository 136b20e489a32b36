"""Command-line entry point.

Exit codes: 0 pass, 1 verification failed, 2 parse/validation error,
3 disconnected input, 4 size cap exceeded, 5 claim violated.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import exact as exact_mod
from .enumerate import CLAIMS, all_trees
from .errors import CapExceededError, DisconnectedError, ValidationError
from .graph import Graph, parse_edge_list, parse_graph6
from .treecolor import color_graph, palette_size
from .verify import (
    first_failing_pair_edge,
    first_failing_pair_vertex,
    format_coloring,
    format_edge_coloring,
    parse_coloring,
    parse_edge_coloring,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INVALID = 2
EXIT_DISCONNECTED = 3
EXIT_CAP = 4
EXIT_VIOLATION = 5

log = logging.getLogger("cfconn")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def read_graph(path: str) -> Graph:
    text = _read_text(path)
    if path.endswith((".g6", ".graph6")):
        return parse_graph6(text)
    return parse_edge_list(text)


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _cap_value(flag_value, default, name):
    if flag_value is None:
        return default
    if flag_value > default:
        log.warning("raising %s from %d to %d; exhaustive search cost grows exponentially", name, default, flag_value)
    return flag_value


def cmd_color(args) -> int:
    g = read_graph(args.graph)
    coloring = color_graph(g)
    _emit(format_coloring(coloring), args.output)
    summary = f"n={g.n} colors={coloring.k} bound={palette_size(g.n)}"
    print(summary, file=sys.stdout if args.output not in (None, "-") else sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    text = _read_text(args.coloring)
    if args.variant == "vertex":
        coloring = parse_coloring(text, g.n)
        bad = first_failing_pair_vertex(g, coloring, max_n=args.max_n)
    else:
        coloring = parse_edge_coloring(text, g)
        bad = first_failing_pair_edge(g, coloring, max_n=args.max_n)
    if bad is None:
        print("pass")
        return EXIT_OK
    print(f"fail pair=({bad[0]},{bad[1]})")
    return EXIT_VERIFY_FAIL


def _witness_text(g, result) -> str:
    w = result.witness
    if isinstance(w, exact_mod.Ranking):
        return "".join(f"{v}\t{x}\n" for v, x in enumerate(w.labels))
    if isinstance(w, exact_mod.EdgeColoring):
        return format_edge_coloring(g, w)
    return format_coloring(w)


def cmd_exact(args) -> int:
    g = read_graph(args.graph)
    max_n = _cap_value(args.max_n, exact_mod.default_max_n(), "max_n")
    max_edges = _cap_value(args.max_edges, exact_mod.default_max_edges(), "max_edges")
    solvers = {
        "vcfc": lambda: exact_mod.exact_vcfc(g, max_n=max_n),
        "cfc": lambda: exact_mod.exact_cfc(g, max_edges=max_edges),
        "ranking": lambda: exact_mod.exact_ranking(g, max_n=max_n),
    }
    if args.invariant == "all":
        values = [solvers[name]().value for name in ("vcfc", "cfc", "ranking")]
        graph_id = "stdin" if args.graph == "-" else Path(args.graph).stem
        print("\t".join([graph_id, str(g.n)] + [str(v) for v in values]))
        return EXIT_OK
    result = solvers[args.invariant]()
    print(f"value={result.value} explored={result.explored}")
    if args.output:
        _emit(_witness_text(g, result), args.output)
    return EXIT_OK


def cmd_trees(args) -> int:
    catalog = all_trees(args.n)
    for key, t in catalog:
        if args.format == "keys":
            print(key)
        else:
            print(f"# {key}")
            sys.stdout.write(t.to_edge_list())
    print(f"count={len(catalog)}", file=sys.stderr)
    return EXIT_OK


def cmd_check(args) -> int:
    check = CLAIMS[args.claim]
    kwargs = {}
    if args.claim == "conj14" and args.exact is not None:
        kwargs["exact"] = args.exact
    if args.claim == "mono" and args.samples is not None:
        kwargs["samples"] = args.samples
    report = check(args.n, **kwargs)
    _emit(report.to_tsv(), args.output)
    if args.output not in (None, "-"):
        print(report.summary())
    if report.violations:
        for g, observed, bound in report.violations:
            sys.stderr.write(f"# violation claim={args.claim} observed={observed} bound={bound}\n")
            sys.stderr.write(g.to_edge_list())
        return EXIT_VIOLATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cfconn", description="Conflict-free vertex/edge connection colorings.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="color a connected graph with the splitter recursion")
    p.add_argument("graph")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring for conflict-free connectivity")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--variant", choices=("vertex", "edge"), default="vertex")
    p.add_argument("--max-n", type=int, default=None, help="vertex cap for general-graph path search")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="brute-force vcfc, cfc or ranking number")
    p.add_argument("graph")
    p.add_argument("--invariant", choices=("vcfc", "cfc", "ranking", "all"), default="vcfc")
    p.add_argument("-o", "--output", help="witness file")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-edges", type=int, default=None)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("trees", help="list non-isomorphic trees of order n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("keys", "edges"), default="keys")
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("check", help="sweep a claim over every class of order n")
    p.add_argument("claim", choices=sorted(CLAIMS))
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output")
    p.add_argument("--exact", dest="exact", action="store_true", default=None)
    p.add_argument("--no-exact", dest="exact", action="store_false")
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except DisconnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
