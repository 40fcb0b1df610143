"""Command line: ``stingy invariants | sweep | witness``."""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import BOUNDS
from .coloring import ENUM_MAX_N
from .graph import GraphFormatError, decode_graph6
from .harness import (
    EXIT_INPUT,
    EXIT_OK,
    EXIT_USAGE,
    ConfigError,
    InputError,
    SweepConfig,
    analysis_dict,
    find_witnesses,
    run_sweep,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _random_spec(text: str) -> tuple[int, float, int, int]:
    try:
        n, p, seed, count = text.split(",")
        return int(n), float(p), int(seed), int(count)
    except ValueError:
        raise argparse.ArgumentTypeError("expected N,P,SEED,COUNT") from None


def _bounds(text: str) -> tuple[str, ...]:
    if text == "all":
        return tuple(BOUNDS)
    return tuple(b.strip() for b in text.split(",") if b.strip())


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="PATH|-", help="graph6 file, one graph per line ('-' for stdin)")
    src.add_argument("--exhaustive", type=int, metavar="N", help="every graph with at most N vertices (N <= 8)")
    src.add_argument("--random", type=_random_spec, metavar="N,P,SEED,COUNT", help="seeded G(n, p) graphs")
    p.add_argument("--r", type=int, default=3, help="class order for respectful greedy search (default 3)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-enum-n", type=int, default=ENUM_MAX_N)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="stingy", description="Exact chromatic bounds checker for small graphs.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    inv = sub.add_parser("invariants", help="print the invariant record of one graph")
    inv.add_argument("graph6", nargs="?", help="graph6 string (default: first line of --input)")
    inv.add_argument("--input", metavar="PATH|-")
    inv.add_argument("--r", type=int, default=3)

    sw = sub.add_parser("sweep", help="evaluate bounds over many graphs")
    _add_source(sw)
    sw.add_argument("--bounds", type=_bounds, default=tuple(BOUNDS), metavar="ID[,ID...]|all")
    sw.add_argument("--out", metavar="PATH", help="write the JSON report here ('-' for stdout)")
    sw.add_argument("--tight-cap", type=int, default=20, help="tight witnesses listed per bound")
    sw.add_argument("--timing", action="store_true", help="record wall time in the JSON report")

    wi = sub.add_parser("witness", help="list graphs tight for, or violating, one bound")
    wi.add_argument("bound", help="bound id")
    wi.add_argument("--mode", choices=("tight", "violation"), default="tight")
    _add_source(wi)
    return ap


def _read_one(args) -> str:
    if args.graph6 is not None:
        return args.graph6
    if args.input is None:
        raise ConfigError("give a graph6 string or --input")
    stream = sys.stdin if args.input == "-" else open(args.input, encoding="ascii", errors="replace")
    with stream:
        for line in stream:
            if line.strip():
                return line.strip()
    raise ConfigError("input holds no graph")


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        if args.command == "invariants":
            try:
                g = decode_graph6(_read_one(args))
            except OSError as exc:
                print(f"stingy: {exc}", file=sys.stderr)
                return EXIT_INPUT
            print(json.dumps(analysis_dict(g, args.r), indent=2))
            return EXIT_OK

        common = dict(input=args.input, exhaustive=args.exhaustive, random=args.random,
                      r=args.r, jobs=args.jobs, max_enum_n=args.max_enum_n)
        if args.command == "witness":
            if args.bound not in BOUNDS:
                raise ConfigError(f"unknown bound id {args.bound!r}")
            for g6 in find_witnesses(SweepConfig(**common), args.bound, args.mode):
                print(g6)
            return EXIT_OK

        config = SweepConfig(**common, bounds=args.bounds, out=args.out,
                             tight_cap=args.tight_cap, timing=args.timing)
        report = run_sweep(config, stderr=sys.stderr)
        if args.out == "-":
            sys.stdout.write(report.to_json())
        else:
            sys.stdout.write(report.table())
            if args.out:
                with open(args.out, "w", encoding="ascii") as fh:
                    fh.write(report.to_json())
        return report.exit_code
    except GraphFormatError as exc:
        print(f"stingy: malformed graph6: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InputError as exc:
        print(f"stingy: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConfigError as exc:
        print(f"stingy: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
