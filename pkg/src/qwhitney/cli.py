"""Command-line front end for the triangles, polynomials, and checks.

Four subcommands:

    triangle  --kind {w|W|s|sr} --n-max INT [--r0 INT] [--eval q=RAT,r=RAT] [--format FMT]
    cauchy    --kind {first|second} --n INT [--eval q=RAT,r=RAT] [--format FMT]
    egf       --which {c|chat|w:K} --order INT [--format FMT]
    verify    --suite NAME --n-max INT [--shift-values RAT,RAT,...]

Formats are text (default), json, csv, and latex.  Rationals on the
command line are written "a" or "a/b".  All output is exact; no floating
point appears anywhere.  Results go to standard output and counterexample
diagnostics to the error stream.  Exit codes: 0 on success, 1 when a
verification suite finds a failing identity, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import suites
from .cauchy import CauchyKind, cauchy_poly
from .poly import BiPoly
from .series import Series, cauchy_first_egf, cauchy_second_egf, whitney_column_egf
from .triangles import (
    TriangleKind,
    triangle,
    whitney_first_values,
    whitney_second_values,
)

FORMATS = ("text", "json", "csv", "latex")

_TRIANGLE_KINDS = {
    "w": TriangleKind.WHITNEY_FIRST,
    "W": TriangleKind.WHITNEY_SECOND,
    "s": TriangleKind.STIRLING_FIRST,
    "sr": TriangleKind.R_STIRLING_FIRST,
}

_MAX_REPORTED_FAILURES = 20


class UsageError(Exception):
    """Semantic command-line error; maps to exit code 2."""


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"invalid rational {text!r}") from exc


def _parse_eval(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    values: dict[str, Fraction] = {}
    for part in parts:
        key, sep, raw = part.partition("=")
        key = key.strip()
        if not sep or key in values or key not in ("q", "r"):
            raise argparse.ArgumentTypeError(f"expected q=RAT,r=RAT, got {text!r}")
        values[key] = _parse_rational(raw)
    if set(values) != {"q", "r"}:
        raise argparse.ArgumentTypeError(f"expected q=RAT,r=RAT, got {text!r}")
    return values["q"], values["r"]


def _parse_shifts(text: str) -> tuple[Fraction, ...]:
    items = text.split(",")
    if not items or any(not item.strip() for item in items):
        raise argparse.ArgumentTypeError(f"expected RAT,RAT,..., got {text!r}")
    return tuple(_parse_rational(item) for item in items)


def _parse_nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError("value must be nonnegative")
    return value


def _parse_which(text: str) -> tuple[str, int]:
    if text == "c":
        return ("c", 0)
    if text == "chat":
        return ("chat", 0)
    if text.startswith("w:"):
        try:
            k = int(text[2:])
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"invalid column in {text!r}") from exc
        if k < 0:
            raise argparse.ArgumentTypeError("column must be nonnegative")
        return ("w", k)
    raise argparse.ArgumentTypeError(f"expected c, chat, or w:K, got {text!r}")


def _poly_str(p: BiPoly, fmt: str) -> str:
    return p.to_latex() if fmt == "latex" else p.to_text()


def _json_dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _rat_json(x: Fraction) -> dict[str, int]:
    return {"num": x.numerator, "den": x.denominator}


def _cmd_triangle(args: argparse.Namespace) -> int:
    kind = args.kind
    if args.r0 is not None and kind != "sr":
        raise UsageError("--r0 only applies to --kind sr")
    r0 = args.r0 if args.r0 is not None else 0
    n_max = args.n_max
    fmt = args.format

    numeric: list[list[Fraction]] | None = None
    if args.eval is not None:
        q0, rv = args.eval
        # The Stirling kinds are constant in q and r, so the requested
        # evaluation point does not affect them.
        if kind == "w":
            numeric = whitney_first_values(n_max, q0, rv)
        elif kind == "W":
            numeric = whitney_second_values(n_max, q0, rv)
        elif kind == "s":
            numeric = whitney_first_values(n_max, 1, 0)
        else:
            numeric = whitney_first_values(n_max, 1, r0)

    if fmt == "json":
        payload: dict[str, object] = {"kind": kind, "n_max": n_max}
        if kind == "sr":
            payload["r0"] = r0
        if args.eval is not None:
            q0, rv = args.eval
            payload["eval"] = {"q": str(q0), "r": str(rv)}
            payload["entries"] = [[_rat_json(v) for v in row] for row in numeric]
        else:
            tri = triangle(_TRIANGLE_KINDS[kind], n_max, r0 if kind == "sr" else None)
            payload["entries"] = [
                [tri.entry(n, k).to_records() for k in range(n + 1)] for n in range(n_max + 1)
            ]
        print(_json_dump(payload))
        return 0

    if numeric is not None:
        cells = [[str(v) for v in row] for row in numeric]
    else:
        tri = triangle(_TRIANGLE_KINDS[kind], n_max, r0 if kind == "sr" else None)
        cells = [
            [_poly_str(tri.entry(n, k), fmt) for k in range(n + 1)] for n in range(n_max + 1)
        ]

    if fmt == "csv":
        print("n,k,value")
        for n, row in enumerate(cells):
            for k, value in enumerate(row):
                print(f"{n},{k},{value}")
    else:
        for n, row in enumerate(cells):
            for k, value in enumerate(row):
                print(f"n={n} k={k}: {value}")
    return 0


def _cmd_cauchy(args: argparse.Namespace) -> int:
    kind = CauchyKind(args.kind)
    poly = cauchy_poly(kind, args.n)
    fmt = args.format

    if args.eval is not None:
        q0, rv = args.eval
        value = poly.eval_at(q0, rv)
        if fmt == "json":
            payload = {
                "kind": args.kind,
                "n": args.n,
                "eval": {"q": str(q0), "r": str(rv)},
                "entries": _rat_json(value),
            }
            print(_json_dump(payload))
        elif fmt == "csv":
            print("n,value")
            print(f"{args.n},{value}")
        else:
            print(value)
        return 0

    if fmt == "json":
        print(_json_dump({"kind": args.kind, "n": args.n, "entries": poly.to_records()}))
    elif fmt == "csv":
        print("n,value")
        print(f"{args.n},{poly.to_text()}")
    else:
        print(_poly_str(poly, fmt))
    return 0


def _cmd_egf(args: argparse.Namespace) -> int:
    which, column = args.which
    order = args.order
    if which == "c":
        s: Series = cauchy_first_egf(order)
        kind_str = "c"
    elif which == "chat":
        s = cauchy_second_egf(order)
        kind_str = "chat"
    else:
        s = whitney_column_egf(column, order)
        kind_str = f"w:{column}"
    fmt = args.format

    if fmt == "json":
        payload = {
            "kind": kind_str,
            "order": order,
            "entries": [s.coeff(n).to_records() for n in range(order + 1)],
        }
        print(_json_dump(payload))
    elif fmt == "csv":
        print("n,value")
        for n in range(order + 1):
            print(f"{n},{s.coeff(n).to_text()}")
    else:
        for n in range(order + 1):
            print(f"t^{n}: {_poly_str(s.coeff(n), fmt)}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = suites.run_suite(args.suite, args.n_max, args.shift_values)
    all_passed = True
    for result in results:
        if result.passed:
            print(f"suite {result.name}: ok ({result.checks} checks)")
            continue
        all_passed = False
        print(f"suite {result.name}: FAIL ({len(result.failures)} of {result.checks} checks)")
        for failure in result.failures[:_MAX_REPORTED_FAILURES]:
            print(f"counterexample: {failure}", file=sys.stderr)
        remaining = len(result.failures) - _MAX_REPORTED_FAILURES
        if remaining > 0:
            print(f"... and {remaining} more counterexamples", file=sys.stderr)
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwhitney",
        description="Exact triangles and Cauchy polynomials with a q parameter.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tri = sub.add_parser("triangle", help="generate a triangle of connection coefficients")
    p_tri.add_argument("--kind", required=True, choices=tuple(_TRIANGLE_KINDS))
    p_tri.add_argument("--n-max", required=True, type=_parse_nonneg)
    p_tri.add_argument("--r0", type=_parse_nonneg, default=None, help="shift for --kind sr (default 0)")
    p_tri.add_argument("--eval", type=_parse_eval, default=None, metavar="q=RAT,r=RAT")
    p_tri.add_argument("--format", choices=FORMATS, default="text")
    p_tri.set_defaults(run=_cmd_triangle)

    p_cau = sub.add_parser("cauchy", help="print one Cauchy polynomial with a q parameter")
    p_cau.add_argument("--kind", required=True, choices=("first", "second"))
    p_cau.add_argument("--n", required=True, type=_parse_nonneg)
    p_cau.add_argument("--eval", type=_parse_eval, default=None, metavar="q=RAT,r=RAT")
    p_cau.add_argument("--format", choices=FORMATS, default="text")
    p_cau.set_defaults(run=_cmd_cauchy)

    p_egf = sub.add_parser("egf", help="expand an exponential generating function")
    p_egf.add_argument("--which", required=True, type=_parse_which, metavar="{c|chat|w:K}")
    p_egf.add_argument("--order", required=True, type=_parse_nonneg)
    p_egf.add_argument("--format", choices=FORMATS, default="text")
    p_egf.set_defaults(run=_cmd_egf)

    p_ver = sub.add_parser("verify", help="run a named verification suite")
    p_ver.add_argument("--suite", required=True, choices=suites.suite_names())
    p_ver.add_argument("--n-max", required=True, type=_parse_nonneg)
    p_ver.add_argument("--shift-values", type=_parse_shifts, default=None, metavar="RAT,RAT,...")
    p_ver.set_defaults(run=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
