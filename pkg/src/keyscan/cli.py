"""Command-line interface.

Subcommands: right-key, left-key, verify, demazure, schur, enumerate.
Tableaux are read from a file argument or standard input in the text
format of :mod:`keyscan.tableau`; results go to standard output, traces
to standard error.

Exit codes: 1 for bad input, 2 for an oracle or engine disagreement
(an implementation bug), 3 for a verification counterexample.
"""

from __future__ import annotations

import argparse
import sys

from . import demazure, jdt, scanning, verify
from .tableau import (
    TableauError,
    enumerate_tableaux,
    format_tableau,
    parse_tableau,
)


def _read_tableau(path):
    try:
        text = sys.stdin.read() if path in (None, "-") else open(path).read()
        return parse_tableau(text)
    except OSError as exc:
        raise TableauError(str(exc))


def _int_list(text):
    return tuple(int(x) for x in text.replace(",", " ").split())


def _cmd_right_key(args):
    t = _read_tableau(args.file)
    s = scanning.scanning_tableau(t)
    if args.explain:
        for start, passes in enumerate(scanning.scan_trace(t), start=1):
            print(f"start column {start}:", file=sys.stderr)
            for values in passes:
                print("  (" + ",".join(map(str, values)) + ")", file=sys.stderr)
    sys.stdout.write(format_tableau(s))
    if args.oracle:
        r = jdt.right_key_oracle(t)
        if r == s:
            print("AGREE", file=sys.stderr)
        else:
            print("DISAGREE", file=sys.stderr)
            sys.stderr.write(format_tableau(r))
            return 2
    return 0


def _cmd_left_key(args):
    t = _read_tableau(args.file)
    lk = scanning.left_key(t)
    sys.stdout.write(format_tableau(lk))
    if args.oracle:
        r = jdt.left_key_oracle(t)
        if r == lk:
            print("AGREE", file=sys.stderr)
        else:
            print("DISAGREE", file=sys.stderr)
            sys.stderr.write(format_tableau(r))
            return 2
    return 0


def _cmd_verify(args):
    report = verify.run_sweep(
        args.max_boxes, args.max_entry, jobs=args.jobs, check_swaps=args.check_swaps
    )
    for line in report.format_lines():
        print(line)
    return 0 if report.ok else 3


def _cmd_demazure(args):
    mu, w, n = _int_list(args.mu), _int_list(args.w), args.n
    if args.all_engines:
        by_scan = demazure.demazure_character(mu, w, n, engine="scan")
        by_oracle = demazure.demazure_character(mu, w, n, engine="oracle")
        by_ops = demazure.demazure_by_operators(mu, w, n)
        sys.stdout.write(demazure.format_polynomial(by_scan))
        if by_scan == by_oracle == by_ops:
            print("ENGINES AGREE", file=sys.stderr)
            return 0
        print("ENGINES DISAGREE", file=sys.stderr)
        for name, p in (("oracle", by_oracle), ("recursion", by_ops)):
            print(f"-- {name}:", file=sys.stderr)
            sys.stderr.write(demazure.format_polynomial(p))
        return 2
    if args.engine == "recursion":
        p = demazure.demazure_by_operators(mu, w, n)
    else:
        p = demazure.demazure_character(mu, w, n, engine=args.engine)
    sys.stdout.write(demazure.format_polynomial(p))
    return 0


def _cmd_schur(args):
    p = demazure.schur_polynomial(_int_list(args.mu), args.n)
    sys.stdout.write(demazure.format_polynomial(p))
    return 0


def _cmd_enumerate(args):
    count = 0
    for t in enumerate_tableaux(_int_list(args.shape), args.n):
        sys.stdout.write(format_tableau(t, header=False))
        sys.stdout.write("\n")
        count += 1
    print(f"{count} tableaux", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="keyscan",
        description="Right and left keys of semistandard tableaux, "
        "with jeu de taquin verification and Demazure characters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("right-key", help="right key by the scanning method")
    p.add_argument("file", nargs="?", help="tableau file (default: stdin)")
    p.add_argument("--explain", action="store_true", help="print EWIS passes to stderr")
    p.add_argument("--oracle", action="store_true", help="cross-check against jeu de taquin")
    p.set_defaults(func=_cmd_right_key)

    p = sub.add_parser("left-key", help="left key by the scanning method")
    p.add_argument("file", nargs="?")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=_cmd_left_key)

    p = sub.add_parser("verify", help="exhaustive sweep against the oracles")
    p.add_argument("--max-boxes", type=int, required=True)
    p.add_argument("--max-entry", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--check-swaps", action="store_true",
                   help="also check frankness/rectification at every length swap")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("demazure", help="Demazure character (key polynomial)")
    p.add_argument("--mu", required=True, help="partition, e.g. 2,1")
    p.add_argument("--w", required=True, help="permutation images, e.g. 3,1,2")
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--engine", choices=["scan", "oracle", "recursion"], default="scan")
    g.add_argument("--all-engines", action="store_true")
    p.set_defaults(func=_cmd_demazure)

    p = sub.add_parser("schur", help="Schur polynomial as a tableau sum")
    p.add_argument("--mu", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_schur)

    p = sub.add_parser("enumerate", help="all semistandard tableaux of a shape")
    p.add_argument("--shape", required=True, help="column lengths, e.g. 2,1")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TableauError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
