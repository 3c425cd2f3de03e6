"""Scan the three-term family (t+x, (b+x)(d+x), (a+x)(c+x)) over a grid of t.

Prints a CSV row per point: pairwise interlacing, the full-interlacing verdict
and the witness determinant. Points with 2 <= t < 5/2 are pairwise interlacing
but fail full interlacing.

    python3 scripts/scan_example.py --abcd 1 2 3 4 --lo 3/2 --hi 7/2 --steps 16
"""
import argparse
import sys
from fractions import Fraction

from interlacing.harness import scan_counterexamples, scan_csv


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--abcd", nargs=4, type=Fraction, default=[1, 2, 3, 4])
    ap.add_argument("--lo", type=Fraction, default=Fraction(3, 2))
    ap.add_argument("--hi", type=Fraction, default=Fraction(7, 2))
    ap.add_argument("--steps", type=int, default=16)
    ap.add_argument("--window", type=int, default=None)
    args = ap.parse_args(argv)
    a, b, c, d = args.abcd
    step = (args.hi - args.lo) / args.steps
    grid = [(a, b, c, d, args.lo + k * step) for k in range(args.steps + 1)]
    sys.stdout.write(scan_csv(scan_counterexamples(grid, args.window)))


if __name__ == "__main__":
    main()
