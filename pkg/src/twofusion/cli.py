"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verification mismatch or failed fit.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import qip, realopt, slopes
from .qlaurent import format_poly
from .statesum import GOLDEN_PATH, KnotParams, colored_jones, load_golden

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be a natural number, got {v}")
    return v


def _int_range(text: str) -> range:
    try:
        a, b = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text!r}")
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


def _q(x: Fraction | None) -> str | None:
    return None if x is None else str(Fraction(x))


def _add_knot(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--m2", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twofusion", description="Colored Jones polynomials of 2-fusion knots K(m1,m2).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("jones", help="print the colored Jones polynomial")
    _add_knot(p)
    p.add_argument("--n", type=_natural, required=True)
    p.add_argument("--mirror", action="store_true", help="apply q -> 1/q")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("degree", help="CSV of n, degree for n = 0..nmax")
    _add_knot(p)
    p.add_argument("--nmax", type=_natural, required=True)
    p.add_argument("--mirror", action="store_true")

    p = sub.add_parser("slope", help="closed-form slopes as JSON")
    _add_knot(p)

    p = sub.add_parser("maximize", help="lattice maximum of the summand degree")
    _add_knot(p)
    p.add_argument("--n", type=_natural, required=True)

    p = sub.add_parser("verify", help="fit the degree sequence and compare with the formula")
    _add_knot(p)
    p.add_argument("--nmax", type=_natural, default=25)

    p = sub.add_parser("scan", help="verify slopes over a box of parameters")
    p.add_argument("--m1-range", type=_int_range, required=True)
    p.add_argument("--m2-range", type=_int_range, required=True)
    p.add_argument("--nmax", type=_natural, default=25)
    p.add_argument("--out", type=Path)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("golden", help="replay polynomial fixtures")
    p.add_argument("--fixtures", type=Path, default=GOLDEN_PATH)
    return parser


def _cmd_jones(args) -> int:
    poly = colored_jones(KnotParams(args.m1, args.m2), args.n, mirror=args.mirror)
    if args.format == "json":
        print(json.dumps({"m1": args.m1, "m2": args.m2, "n": args.n, "mirror": args.mirror, "poly": format_poly(poly)}))
    else:
        print(format_poly(poly))
    return EXIT_OK


def _cmd_degree(args) -> int:
    seq = qip.degree_sequence(KnotParams(args.m1, args.m2), args.nmax, mirror=args.mirror)
    print("n,degree")
    for n, d in enumerate(seq):
        print(f"{n},{d}")
    return EXIT_OK


def slope_record(m1: int, m2: int) -> dict:
    p = KnotParams(m1, m2)
    js = slopes.js(p)
    return {
        "m1": m1,
        "m2": m2,
        "js": _q(js),
        "js4": _q(4 * js),
        "sector": str(slopes.lattice_sector(p)),
        "js_real": _q(slopes.js_real(p)),
        "real_sector": str(slopes.real_sector(p)),
        "mirror_slope": _q(slopes.mirror_slope(p)),
        "realopt_value": _q(realopt.maximize_over_P(p)[0]),
    }


def _cmd_slope(args) -> int:
    print(json.dumps(slope_record(args.m1, args.m2), indent=2))
    return EXIT_OK


def _cmd_maximize(args) -> int:
    res = qip.brute_maximize(KnotParams(args.m1, args.m2), args.n)
    print(json.dumps({
        "m1": args.m1,
        "m2": args.m2,
        "n": res.n,
        "max_value": _q(res.max_value),
        "maximizers": [list(k) for k in res.maximizers],
        "tie": res.tie,
        "leading_sum_cancels": res.leading_sum_cancels,
    }, indent=2))
    return EXIT_OK


def _cmd_verify(args) -> int:
    p = KnotParams(args.m1, args.m2)
    formula = slopes.js(p)
    try:
        fitted = qip.extract_slope(p, args.nmax)
    except qip.FitInconsistent as exc:
        print(f"fit failed: {exc}")
        return EXIT_MISMATCH
    cancel = [n for n in range(args.nmax + 1) if qip.brute_maximize(p, n).leading_sum_cancels]
    status = "match" if fitted == formula else "MISMATCH"
    print(f"m1={p.m1} m2={p.m2} fitted={fitted} formula={formula} {status}")
    if cancel:
        print("leading-term cancellation at n=" + ",".join(map(str, cancel)))
    return EXIT_OK if fitted == formula else EXIT_MISMATCH


def _cmd_scan(args) -> int:
    rows = qip.scan(args.m1_range, args.m2_range, args.nmax)
    text = qip.scan_csv(rows) if args.format == "csv" else qip.scan_json(rows) + "\n"
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if all(r.match for r in rows) else EXIT_MISMATCH


def _cmd_golden(args) -> int:
    try:
        records = load_golden(args.fixtures)
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc))
    failed = 0
    for r in records:
        tag = f"{r.params.m1} {r.params.m2} {r.n}"
        got = colored_jones(r.params, r.n)
        if r.suspect:
            verdict = "suspect-skipped" + (" (agrees)" if got == r.poly else "")
            print(f"{tag}: {verdict}; computed {format_poly(got)}")
        elif got == r.poly:
            print(f"{tag}: ok")
        else:
            failed += 1
            print(f"{tag}: FAIL; computed {format_poly(got)}")
    return EXIT_OK if not failed else EXIT_MISMATCH


_COMMANDS = {
    "jones": _cmd_jones,
    "degree": _cmd_degree,
    "slope": _cmd_slope,
    "maximize": _cmd_maximize,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
    "golden": _cmd_golden,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"twofusion: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
