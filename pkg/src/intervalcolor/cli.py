"""Command-line front end.

Exit codes: 0 success / verdict true; 1 verdict false, infeasible, or
aborted; 2 usage or parse error (including violated preconditions); 3
internal invariant violation, i.e. a bug worth reporting.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator

from .bounds import BoundReport, applicable_bounds, bound_report_to_json
from .catalog import generate_connected_catalog
from .coloring import coloring_from_json, validate_interval, validation_report_to_json
from .doubling import certificate_to_json, double_with_certificate
from .errors import DomainError, InternalInvariantError, InvalidColoringError, ParseError
from .graph import Graph, classify, parse_edge_list, parse_graph6
from .solver import SearchLimits, SolveStatus, compute_W, find_interval_coloring, outcome_to_json
from .survey import run_survey, write_survey_csv

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_DEFECT = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "edges":
        return parse_edge_list(text)
    for line in text.splitlines():
        line = line.strip()
        if line:
            return parse_graph6(line)
    raise ParseError("no graph6 line found in input")


def _load_coloring(path: str, g: Graph):
    text = _read_text(path)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"coloring file is not valid JSON: {exc}") from None
    return coloring_from_json(g, doc)


def _print_json(doc: dict, stream=None) -> None:
    json.dump(doc, stream or sys.stdout, indent=2)
    print(file=stream or sys.stdout)


def _cmd_validate(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph, args.format)
    coloring = _load_coloring(args.coloring, g)
    report = validate_interval(g, coloring)
    _print_json(validation_report_to_json(report))
    return EXIT_OK if report.verdict else EXIT_NEGATIVE


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph, args.format)
    limits = SearchLimits(node_limit=args.node_limit)
    if args.t is not None:
        outcome = find_interval_coloring(g, args.t, limits)
    else:
        outcome = compute_W(g, limits)
    _print_json(outcome_to_json(outcome, g))
    return EXIT_OK if outcome.status is SolveStatus.FOUND else EXIT_NEGATIVE


def _cmd_double(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph, args.format)
    coloring = _load_coloring(args.coloring, g)
    cert = double_with_certificate(g, coloring)
    _print_json(certificate_to_json(cert))
    return EXIT_OK


def _cmd_bounds(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph, args.format)
    claims = applicable_bounds(g, classify(g), planar_asserted=args.planar)
    report = BoundReport(
        claims=claims, best=min(c.bound for c in claims), audited_W=None, violations=()
    )
    _print_json(bound_report_to_json(report))
    return EXIT_OK


def _graph6_stream(path: str) -> Iterator[Graph]:
    for line in _read_text(path).splitlines():
        line = line.strip()
        if line:
            yield parse_graph6(line)


def _cmd_survey(args: argparse.Namespace) -> int:
    if args.gen_n is not None:
        graphs = generate_connected_catalog(args.gen_n)
    else:
        graphs = _graph6_stream(args.input)
    limits = SearchLimits(node_limit=args.node_limit)
    records = run_survey(graphs, limits, with_doubling=args.with_doubling)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_survey_csv(records, fh)
    else:
        write_survey_csv(records, sys.stdout)
    return EXIT_OK


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _add_graph_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--graph", required=True, help="graph file, or - for stdin")
    sub.add_argument("--format", choices=("g6", "edges"), default="g6")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intervalcolor",
        description="Exact interval edge-coloring toolkit: validate, solve, double, bound, survey.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("validate", help="check a coloring document against a graph")
    _add_graph_args(p)
    p.add_argument("--coloring", required=True, help="coloring JSON file, or - for stdin")
    p.set_defaults(func=_cmd_validate)

    p = subparsers.add_parser("solve", help="decide one t, or compute the maximum W")
    _add_graph_args(p)
    p.add_argument("--t", type=int, default=None, help="decide this palette size only")
    p.add_argument(
        "--node-limit", type=_nonnegative_int, default=0, help="abort after this many nodes"
    )
    p.set_defaults(func=_cmd_solve)

    p = subparsers.add_parser("double", help="emit a doubling certificate for a valid coloring")
    _add_graph_args(p)
    p.add_argument("--coloring", required=True)
    p.set_defaults(func=_cmd_double)

    p = subparsers.add_parser("bounds", help="report applicable upper bounds on W")
    _add_graph_args(p)
    p.add_argument("--planar", action="store_true", help="assert the graph is planar")
    p.set_defaults(func=_cmd_bounds)

    p = subparsers.add_parser("survey", help="batch pipeline over a graph6 stream, CSV out")
    source = p.add_mutually_exclusive_group()
    source.add_argument("--gen-n", type=int, default=None, help="survey the n-vertex catalog")
    source.add_argument("--input", default="-", help="graph6 file, or - for stdin")
    p.add_argument("--with-doubling", action="store_true")
    p.add_argument("--out", default=None, help="CSV output path (default stdout)")
    p.add_argument("--node-limit", type=_nonnegative_int, default=0)
    p.set_defaults(func=_cmd_survey)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidColoringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInvariantError as exc:
        print(f"internal invariant violation (this is a bug): {exc}", file=sys.stderr)
        return EXIT_DEFECT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
