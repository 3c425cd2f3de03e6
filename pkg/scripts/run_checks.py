"""Run every randomized statement check and print a summary table.

    python3 scripts/run_checks.py --count 200 --seed 0 [--only flip product]
"""
import argparse
import json
import time

from interlacing.harness import STATEMENTS, run_statement


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--only", nargs="*", choices=sorted(STATEMENTS))
    ap.add_argument("--show-failures", type=int, default=3)
    args = ap.parse_args(argv)
    failed = False
    for name in args.only or sorted(STATEMENTS):
        t0 = time.perf_counter()
        reports = run_statement(name, args.count, args.seed)
        bad = [r for r in reports if not r.ok]
        failed |= bool(bad)
        print(f"{name:12s} {len(reports) - len(bad):5d}/{len(reports)} verified"
              f"  {time.perf_counter() - t0:6.1f}s")
        for r in bad[:args.show_failures]:
            print("  " + json.dumps(r.to_json()))
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
