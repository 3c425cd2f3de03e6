"""Command line front end.

Exit codes: 0 when everything verified / passed, 1 when a violation or TP
failure was found, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import harness
from .errors import InterlacingError, PreconditionFailed
from .interlace import interlaces_roots, interlaces_tp, is_fully_interlacing
from .series import Series, as_rat, veronese_section
from .subdivision import HFamily, check_prop_app, esd2_family
from .tp import DEFAULT_ORDER, RatMatrix, is_tp
from .windows import (SeriesMatrix, WindowSpec, hurwitz_window, lace_window,
                      veronese_matrix, veronese_matrix_flip)


class InputError(Exception):
    pass


def _load(path: str):
    try:
        with (sys.stdin if path == "-" else open(path)) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(obj):
    print(json.dumps(obj, indent=2))


def _window_spec(args, A: SeriesMatrix) -> WindowSpec:
    if args.rows or args.cols:
        if not (args.rows and args.cols):
            raise InputError("--rows and --cols go together")
        return WindowSpec(args.rows[0], args.rows[1], args.cols[0], args.cols[1])
    size = args.window or (A.trunc + 1)
    return WindowSpec.blocks(A.p, A.q, size)


def cmd_lace(args) -> int:
    A = SeriesMatrix.from_json(_load(args.input))
    if args.hurwitz:
        if A.p != 1 or A.q != 1:
            raise InputError("--hurwitz needs a single series")
        w = _window_spec(args, A)
        M = hurwitz_window(A[0, 0], w)
    else:
        M = lace_window(A, _window_spec(args, A))
    _emit(M.to_json())
    return 0


def cmd_tp_check(args) -> int:
    obj = _load(args.input)
    if isinstance(obj, dict) and "data" in obj:
        v = is_tp(RatMatrix.from_json(obj), args.order)
    else:
        v = is_fully_interlacing(SeriesMatrix.from_json(obj), args.window, args.order)
    _emit(v.to_json())
    return 0 if v.passed else 1


def cmd_veronese(args) -> int:
    obj = _load(args.input)
    if args.k is not None:
        A = Series.from_json(obj)
        _emit(veronese_section(A, args.r, args.k).to_json())
        return 0
    A = SeriesMatrix.from_json(obj)
    out = veronese_matrix_flip(A, args.r) if args.flip else veronese_matrix(A, args.r)
    _emit(out.to_json())
    return 0


def cmd_interlace(args) -> int:
    P = Series.from_json(_load(args.P))
    Q = Series.from_json(_load(args.Q))
    if args.roots:
        ok = interlaces_roots(P, Q)
        _emit({"status": "pass" if ok else "fail", "method": "roots"})
        return 0 if ok else 1
    v = interlaces_tp(P, Q, args.window, args.order)
    _emit(dict(v.to_json(), method="tp"))
    return 0 if v.passed else 1


def cmd_check(args) -> int:
    reports = harness.run_statement(args.statement, args.count, args.seed)
    bad = [r for r in reports if not r.ok]
    if args.json:
        _emit([r.to_json() for r in reports])
    else:
        print(f"{args.statement}: {len(reports) - len(bad)}/{len(reports)} verified")
        for r in bad:
            print(json.dumps(r.to_json()))
    return 1 if bad else 0


def _parse_rats(text: str) -> list[Fraction]:
    return [as_rat(x) for x in text.split(",") if x.strip()]


def cmd_scan(args) -> int:
    quads = [tuple(_parse_rats(q)) for q in (args.abcd or ["1,2,3,4"])]
    if any(len(q) != 4 for q in quads):
        raise InputError("--abcd takes four comma-separated rationals")
    ts = []
    for chunk in args.t or []:
        ts += _parse_rats(chunk)
    if args.t_range:
        lo, hi, steps = as_rat(args.t_range[0]), as_rat(args.t_range[1]), int(args.t_range[2])
        if steps < 1:
            raise InputError("--t-range needs at least one step")
        ts += [lo + (hi - lo) * Fraction(i, steps) for i in range(steps + 1)]
    if not ts:
        ts = [Fraction(k, 8) for k in range(8, 33)]
    grid = [(*q, t) for q in quads for t in ts]
    points = harness.scan_counterexamples(grid, args.window, args.order)
    if args.json:
        _emit([dict(zip(harness.CSV_HEADER, pt.row())) for pt in points])
    else:
        sys.stdout.write(harness.scan_csv(points))
    return 0


def cmd_esd2(args) -> int:
    fam = HFamily.from_json(_load(args.input))
    if not args.check_prop:
        _emit(esd2_family(fam).to_json())
        return 0
    rep = check_prop_app(fam)
    _emit(rep.to_json())
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="interlacing",
                                 description="Exact interlacing-matrix toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def regime(p, window=True):
        if window:
            p.add_argument("--window", type=int, default=None,
                           help="window size in blocks (default: truncation + 1)")
        p.add_argument("--order", type=int, default=DEFAULT_ORDER, help="largest minor order")

    p = sub.add_parser("lace", help="print a window of the Lace (or Hurwitz) matrix")
    p.add_argument("input")
    p.add_argument("--window", type=int)
    p.add_argument("--rows", type=int, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--cols", type=int, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--hurwitz", action="store_true")
    p.set_defaults(func=cmd_lace)

    p = sub.add_parser("tp-check", help="TP verdict for a rational window or a series matrix")
    p.add_argument("input")
    regime(p)
    p.set_defaults(func=cmd_tp_check)

    p = sub.add_parser("veronese", help="Veronese sections of a series or series matrix")
    p.add_argument("input")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-k", type=int)
    p.add_argument("--flip", action="store_true", help="stack the blocks vertically")
    p.set_defaults(func=cmd_veronese)

    p = sub.add_parser("interlace", help="does P interlace Q?")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--tp", action="store_true", default=True)
    mode.add_argument("--roots", action="store_true")
    p.add_argument("P")
    p.add_argument("Q")
    regime(p)
    p.set_defaults(func=cmd_interlace)

    p = sub.add_parser("check", help="run a statement on seeded random instances")
    p.add_argument("statement", choices=sorted(harness.STATEMENTS))
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan", help="classify the three-polynomial family on a grid")
    p.add_argument("--abcd", action="append", help="a,b,c,d (repeatable)")
    p.add_argument("--t", action="append", help="comma-separated t values")
    p.add_argument("--t-range", nargs=3, metavar=("LO", "HI", "STEPS"))
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true", default=True)
    fmt.add_argument("--json", action="store_true")
    regime(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("esd2", help="2-fold edgewise subdivision of an h-family")
    p.add_argument("input")
    p.add_argument("--check-prop", action="store_true")
    p.set_defaults(func=cmd_esd2)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionFailed as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 2
    except (InputError, InterlacingError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
