"""Command-line front end: colour, verify, generate, benchmark.

Exit codes: 0 success, 1 input or usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import sys

from .bench import bench
from .colouring import brooks_bound, brooks_colour
from .dimacs import emit_colouring, parse_colouring, parse_dimacs, write_dimacs
from .errors import BrooksColourError
from .generators import generate
from .oracle import verify_colouring


class _Parser(argparse.ArgumentParser):
    # usage errors are exit code 1; argparse defaults to 2, which is
    # reserved for verification failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_color(args) -> int:
    g = parse_dimacs(_read_text(args.graph))
    colouring, report = brooks_colour(g)
    violations = verify_colouring(g, colouring, brooks_bound(g))
    if violations:
        for v in violations[:20]:
            print(f"violation: {v}", file=sys.stderr)
        return 2
    _write_text(args.out, emit_colouring(colouring, report))
    return 0


def _cmd_verify(args) -> int:
    g = parse_dimacs(_read_text(args.graph))
    colouring = parse_colouring(_read_text(args.colouring), g.n)
    violations = verify_colouring(g, colouring, args.bound)
    if violations:
        for v in violations[:20]:
            print(f"violation: {v}", file=sys.stderr)
        if len(violations) > 20:
            print(f"... {len(violations) - 20} more", file=sys.stderr)
        return 2
    print(f"ok: proper colouring with {colouring.num_colours} colours")
    return 0


def _cmd_gen(args) -> int:
    g = generate(args.kind, args.params, seed=args.seed)
    _write_text(args.out, write_dimacs(g))
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    records = bench(sizes, repeats=args.repeats, seed=args.seed, csv_path=args.csv)
    for rec in records:
        print(f"n={rec.n} m={rec.m} build={rec.build_ns / 1e6:.2f}ms "
              f"colour={rec.colour_ns / 1e6:.2f}ms colours={rec.colours} delta={rec.delta}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="brookscolour",
                     description="Vertex colouring within the Brooks bound in linear time.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", parser_class=_Parser,
                       help="colour a DIMACS graph and print the colouring")
    p.add_argument("graph", help="DIMACS .col file, or - for stdin")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", parser_class=_Parser,
                       help="check a colouring file against a graph")
    p.add_argument("graph", help="DIMACS .col file")
    p.add_argument("colouring", help="colouring file ('s col' / 'v' lines)")
    p.add_argument("--bound", type=int, default=None,
                   help="also require at most this many colours")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", parser_class=_Parser, help="generate a graph")
    p.add_argument("kind", help="cycle | complete | split | random_connected"
                               " | block_chain | theta")
    p.add_argument("params", nargs="+", type=int, help="generator parameters")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", parser_class=_Parser,
                       help="time the colouring pipeline over graph sizes")
    p.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", required=True, help="CSV output path")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrooksColourError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
