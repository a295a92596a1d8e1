#!/usr/bin/env python3
"""Work units and wall time of recognize on sparse-circle instances.

    python3 scripts/bench.py --sizes 10000,100000,1000000 --reps 1
"""

import argparse

from circlekit.cli import bench_rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="10000,100000")
    ap.add_argument("--reps", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",") if s]
    rows = bench_rows(sizes, args.reps, args.seed)
    print(f"{'n':>9} {'m':>9} {'seconds':>8} {'work':>11} {'work/(n+m)':>10}")
    for r in rows:
        print(f"{r['n']:>9} {r['m']:>9} {r['seconds']:>8.2f} {r['work_units']:>11} {r['ratio']:>10.2f}")
    if rows:
        ratios = [r["ratio"] for r in rows]
        print(f"ratio spread {max(ratios) / min(ratios):.2f}")


if __name__ == "__main__":
    main()
