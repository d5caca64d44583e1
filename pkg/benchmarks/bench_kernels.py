#!/usr/bin/env python3
"""Benchmark the compiled antichain-pruning kernel against the pure-Python
fallback on the workloads that dominate power computations.

Usage: python3 benchmarks/bench_kernels.py [--seed N] [--repeat N]
"""

import argparse
import random
import time
from itertools import combinations_with_replacement

from idealpow import _kernels_py
from idealpow.backend import HAVE_COMPILED

if HAVE_COMPILED:
    from idealpow import _kernels


def workload_products(rng, ngens, arity, max_exp, fold):
    """Exponent vectors of all fold-wise products of a random ideal."""
    gens = [tuple(rng.randint(0, max_exp) for _ in range(arity)) for _ in range(ngens)]
    vecs = {
        tuple(sum(col) for col in zip(*combo))
        for combo in combinations_with_replacement(gens, fold)
    }
    return sorted(vecs)


def workload_box(rng, arity, side, count):
    """Random points in a box: mostly incomparable, worst case for pruning."""
    vecs = set()
    while len(vecs) < count:
        vecs.add(tuple(rng.randint(0, side) for _ in range(arity)))
    return sorted(vecs)


def bench(fn, vecs, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(vecs)
        best = min(best, time.perf_counter() - t0)
    return best, len(result)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    cases = [
        ("products n=2, 20 gens, I^4", workload_products(rng, 20, 2, 60, 4)),
        ("products n=3, 12 gens, I^4", workload_products(rng, 12, 3, 30, 4)),
        ("products n=4, 10 gens, I^3", workload_products(rng, 10, 4, 20, 3)),
        ("box n=3, 8000 random points", workload_box(rng, 3, 40, 8000)),
        ("box n=6, 20000 random points", workload_box(rng, 6, 15, 20000)),
    ]

    print(f"compiled kernel available: {HAVE_COMPILED}")
    print(f"{'case':36} {'size':>7} {'pure (ms)':>10} {'compiled (ms)':>14} {'speedup':>8}")
    for name, vecs in cases:
        t_pure, kept = bench(_kernels_py.minimal_indices, vecs, args.repeat)
        if HAVE_COMPILED:
            t_c, kept_c = bench(_kernels.minimal_indices, vecs, args.repeat)
            assert kept == kept_c, "kernels disagree"
            print(f"{name:36} {len(vecs):>7} {t_pure * 1e3:>10.2f} {t_c * 1e3:>14.2f} {t_pure / t_c:>7.1f}x")
        else:
            print(f"{name:36} {len(vecs):>7} {t_pure * 1e3:>10.2f} {'n/a':>14} {'n/a':>8}")


if __name__ == "__main__":
    main()
