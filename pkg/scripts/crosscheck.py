#!/usr/bin/env python3
"""recognize against the brute-force oracle; nonzero exit on disagreement.

    python3 scripts/crosscheck.py --nmax 8 --samples 10000
"""

import argparse
import sys

from circlekit.cli import crosscheck


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=8)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    return 1 if crosscheck(args.nmax, args.samples, args.seed) else 0


if __name__ == "__main__":
    sys.exit(main())
