"""Compare the compiled and pure-Python profile kernels, plus the naive evaluator.

    python benchmarks/bench_kernels.py --sizes 1000 10000 100000 1000000
"""

import argparse
import time

import numpy as np

from digraphseq import DegreeSequence, digraph_check, profile_fast, profile_naive, random_sequence, sort_decreasing_a
from digraphseq import _backend


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[1_000, 10_000, 100_000, 1_000_000])
    ap.add_argument("--max-degree", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--naive-limit", type=int, default=5_000)
    args = ap.parse_args()

    backends = _backend.available()
    header = ["n"] + [f"kernel[{b}]" for b in backends] + ["check[default]", "naive"]
    print("  ".join(f"{h:>15}" for h in header))
    for n in args.sizes:
        seq = random_sequence(n, args.max_degree, "realizable", seed=n)
        order = sort_decreasing_a(seq)
        row = [f"{n:>15}"]
        results = []
        for name in backends:
            results.append(profile_fast(seq, order, backend=name))
            t = best_of(lambda: profile_fast(seq, order, backend=name), args.repeat)
            row.append(f"{t:>14.4f}s")
        assert all(r == results[0] for r in results), "backends disagree"
        t = best_of(lambda: digraph_check(seq), args.repeat)
        row.append(f"{t:>14.4f}s")
        if n <= args.naive_limit:
            assert profile_naive(seq, order) == results[0]
            t = best_of(lambda: profile_naive(seq, order), 1)
            row.append(f"{t:>14.4f}s")
        else:
            row.append(f"{'-':>15}")
        print("  ".join(row))


if __name__ == "__main__":
    main()
