#!/usr/bin/env python3
"""Count k-term-progression-free subsets of {0,...,n-1} via the
container construction and compare against full enumeration.

Usage: python3 scripts/ap_demo.py [--n 14] [--k 3] [--pi 0.55] [--eps 0.5]
"""
import argparse
import sys

from hypercontainers.cli import main


def run() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=14)
    parser.add_argument("--k", type=int, default=3)
    parser.add_argument("--pi", type=float, default=0.55)
    parser.add_argument("--eps", type=float, default=0.5)
    parser.add_argument("--output", "-o", default=None)
    args = parser.parse_args()
    argv = ["demo-ap", "--n", str(args.n), "--k", str(args.k),
            "--pi", str(args.pi), "--eps", str(args.eps)]
    if args.output:
        argv += ["-o", args.output]
    return main(argv)


if __name__ == "__main__":
    sys.exit(run())
