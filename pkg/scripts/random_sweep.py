#!/usr/bin/env python3
"""Sweep random bounded instances over a seed range and summarize how
often each verification condition holds.

Usage: python3 scripts/random_sweep.py [--n 12] [--k 2] [--delta 0.3]
                                       [--eps 0.6] [--trials 20]
"""
import argparse
import sys
from collections import Counter

from hypercontainers import (
    EngineContext,
    derive_params,
    enumerate_independent_sets,
    gen_random,
    sample_independent_sets,
    verify,
)


def run() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=12)
    parser.add_argument("--k", type=int, default=2)
    parser.add_argument("--delta", type=float, default=0.3)
    parser.add_argument("--eps", type=float, default=0.6)
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--enum-cap", type=int, default=20)
    parser.add_argument("--samples", type=int, default=200)
    args = parser.parse_args()

    tally: Counter[str] = Counter()
    for seed in range(args.trials):
        h = gen_random(args.n, args.k, args.delta, args.eps, seed=seed)
        ctx = EngineContext(h, derive_params(h.k, 1.0 - args.delta, args.eps, h.n))
        if h.n <= args.enum_cap:
            sets = enumerate_independent_sets(h, cap=args.enum_cap)
            rep = verify(ctx, sets, enumerated=True)
        else:
            sets = sample_independent_sets(h, args.samples, seed)
            rep = verify(ctx, sets)
        for cond in ("cond_i", "cond_ii", "cond_iii", "cond_iv"):
            tally[cond] += getattr(rep, cond)
        tally["oracle_exact"] += rep.oracle_mode == "exact"

    print(f"trials = {args.trials}")
    for key in ("cond_i", "cond_ii", "cond_iii", "cond_iv", "oracle_exact"):
        print(f"{key} = {tally[key]}/{args.trials}")
    return 0


if __name__ == "__main__":
    sys.exit(run())
