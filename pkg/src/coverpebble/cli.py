"""Command-line front end.

Exit codes: 0 affirmative (COVERS, VALID, value computed), 1 negative
(NOTCOVERS, INVALID), 2 unknown or budget exhausted, 3 bad input,
4 precondition violated.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import FormatError, LimitExceeded, PebblingError, PreconditionViolated
from .graph import cartesian_product, load_graph, read_text, save_graph
from .harness import HarnessLimitExceeded, graph_family, search_conjecture
from .oracle import SearchLimits, check_certificate, covers_exact, phi_exact
from .pebbling import parse_distribution, singleton_values, stacking_number
from .solver import (
    ORACLE_TOKEN,
    CoverDecision,
    Verdict,
    cover_pebbling_number,
    cover_sufficient,
    decide_cover,
    format_certificate,
    parse_certificate,
)

EXIT_YES, EXIT_NO, EXIT_UNKNOWN, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def load_distribution(arg: str, vertex_count: int):
    """Inline vector, ``uniform:k``, ``-`` for stdin, or a file path."""
    if arg.startswith("uniform:"):
        return parse_distribution(arg, vertex_count)
    if arg == "-" or os.path.exists(arg):
        return parse_distribution(read_text(arg), vertex_count)
    return parse_distribution(arg, vertex_count)


def _limits(args) -> SearchLimits:
    return SearchLimits(
        max_states=args.max_states or SearchLimits.max_states,
        max_seconds=args.max_seconds,
    )


def _cmd_phi(args, out):
    g = load_graph(args.graph)
    w = load_distribution(args.weights, g.vertex_count)
    value, v = cover_pebbling_number(g, w)
    print(f"PHI {value} VERTEX {v}", file=out)
    return EXIT_YES


def _cmd_stacking(args, out):
    g = load_graph(args.graph)
    w = load_distribution(args.weights, g.vertex_count)
    if args.all:
        for v, value in enumerate(singleton_values(g.dist, w)):
            print(f"VERTEX {v} VALUE {value}", file=out)
    value, v = stacking_number(g.dist, w)
    print(f"SN {value} VERTEX {v}", file=out)
    return EXIT_YES


def _cmd_cover(args, out):
    g = load_graph(args.graph)
    w = load_distribution(args.weights, g.vertex_count)
    d = load_distribution(args.dist, g.vertex_count)
    if args.method == "auto":
        dec = decide_cover(g, w, d, _limits(args))
    elif args.method == "sufficient":
        dec = cover_sufficient(g, w, d)
    else:
        try:
            ok, moves, _ = covers_exact(g, w, d, _limits(args))
        except LimitExceeded:
            dec = CoverDecision(Verdict.UNKNOWN, method="oracle")
        else:
            dec = (CoverDecision(Verdict.COVERS, moves, None, "oracle") if ok
                   else CoverDecision(Verdict.NOT_COVERS, None, ORACLE_TOKEN, "oracle"))

    if dec.verdict is Verdict.COVERS:
        print("COVERS", file=out)
        print(f"# method={dec.method} moves={len(dec.certificate)}", file=out)
        if args.cert == "-":
            out.write(format_certificate(dec.certificate))
        elif args.cert:
            with open(args.cert, "w", encoding="utf-8") as fh:
                fh.write(format_certificate(dec.certificate))
        return EXIT_YES
    if dec.verdict is Verdict.NOT_COVERS:
        print(f"NOTCOVERS witness={dec.witness_text()}", file=out)
        print(f"# method={dec.method}", file=out)
        return EXIT_NO
    print("UNKNOWN", file=out)
    print(f"# method={dec.method}", file=out)
    return EXIT_UNKNOWN


def _cmd_verify(args, out):
    g = load_graph(args.graph)
    w = load_distribution(args.weights, g.vertex_count)
    d = load_distribution(args.dist, g.vertex_count)
    seq = parse_certificate(read_text(args.cert))
    check = check_certificate(g, d, seq, w)
    if check.valid:
        print("VALID", file=out)
        return EXIT_YES
    print(f"INVALID at {check.index}", file=out)
    print(f"# {check.reason}", file=out)
    return EXIT_NO


def _cmd_oracle_phi(args, out):
    g = load_graph(args.graph)
    w = load_distribution(args.weights, g.vertex_count)
    try:
        value = phi_exact(g, w, _limits(args))
    except LimitExceeded as exc:
        print(f"UNKNOWN limit={exc.reason}", file=out)
        return EXIT_UNKNOWN
    print(f"PHI {value}", file=out)
    return EXIT_YES


def _cmd_product(args, out):
    g = load_graph(args.graphs[0])
    h = load_graph(args.graphs[1])
    p, _ = cartesian_product(g, h)
    save_graph(p, args.output)
    print(f"PRODUCT {p.vertex_count} {len(p.edges)}", file=out)
    return EXIT_YES


def _cmd_conjecture(args, out):
    limits = SearchLimits(max_states=args.max_states or SearchLimits.max_states,
                          max_seconds=args.max_seconds)
    try:
        report = search_conjecture(
            graph_family(args.max_n), args.max_weight, args.budget, limits,
            family_name=f"connected-graphs-n<={args.max_n}",
        )
    except HarnessLimitExceeded as exc:
        out.write(exc.report.to_text())
        return EXIT_UNKNOWN
    out.write(report.to_text())
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coverpebble", description="Weighted cover pebbling toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def limits_opts(p):
        p.add_argument("--max-states", type=int, default=None, help="state budget per search")
        p.add_argument("--max-seconds", type=float, default=None, help="wall-clock budget")

    p = sub.add_parser("phi", help="weighted cover pebbling number via the stacking number")
    p.add_argument("graph")
    p.add_argument("--weights", required=True)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("stacking", help="stacking number, or per-vertex values with --all")
    p.add_argument("graph")
    p.add_argument("--weights", required=True)
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=_cmd_stacking)

    p = sub.add_parser("cover", help="decide whether a distribution covers a weight function")
    p.add_argument("graph")
    p.add_argument("--weights", required=True)
    p.add_argument("--dist", required=True)
    p.add_argument("--method", choices=["auto", "sufficient", "oracle"], default="auto")
    p.add_argument("--cert", help="write the certificate here ('-' for stdout)")
    limits_opts(p)
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("verify", help="replay a certificate")
    p.add_argument("graph")
    p.add_argument("--dist", required=True)
    p.add_argument("--weights", required=True)
    p.add_argument("--cert", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle-phi", help="exact cover pebbling number by enumeration")
    p.add_argument("graph")
    p.add_argument("--weights", required=True)
    limits_opts(p)
    p.set_defaults(func=_cmd_oracle_phi)

    p = sub.add_parser("product", help="Cartesian product of two graphs")
    p.add_argument("graphs", nargs=2)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("conjecture", help="search small graphs for value-condition counterexamples")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="pebble cap (default: stacking number)")
    limits_opts(p)
    p.set_defaults(func=_cmd_conjecture)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except PreconditionViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except LimitExceeded as exc:
        print(f"UNKNOWN limit={exc.reason}", file=out)
        return EXIT_UNKNOWN
    except (FormatError, PebblingError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
