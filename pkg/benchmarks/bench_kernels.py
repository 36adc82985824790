"""Benchmark: compiled kernels vs the pure-Python fallback.

Runs the four search kernels on identical workloads through both backends,
checks that results agree, and prints a timing table.

    python3 benchmarks/bench_kernels.py [--quick]
"""

import argparse
import random
import sys
import time
from itertools import combinations, permutations

from hyperchrome._kernels import pure

try:
    from hyperchrome._kernels import _native
except ImportError:
    _native = None


def random_edges(n, m, seed):
    pool = list(combinations(range(n), 3))
    return random.Random(seed).sample(pool, m)


def bench(label, fn_pure, fn_native, runs):
    t0 = time.perf_counter()
    out_pure = [fn_pure(*args) for args in runs]
    t_pure = time.perf_counter() - t0
    if _native is None:
        print(f"{label:<26} pure {t_pure * 1000:8.1f} ms   native    (not built)")
        return
    t0 = time.perf_counter()
    out_native = [fn_native(*args) for args in runs]
    t_native = time.perf_counter() - t0
    agree = out_pure == out_native
    speedup = t_pure / t_native if t_native > 0 else float("inf")
    print(f"{label:<26} pure {t_pure * 1000:8.1f} ms   native "
          f"{t_native * 1000:8.1f} ms   x{speedup:5.1f}   "
          f"{'results agree' if agree else 'MISMATCH'}")
    if not agree:
        sys.exit(1)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    scale = 1 if args.quick else 4

    print(f"native kernel: {'available' if _native else 'NOT BUILT'}")

    # greedy sweep over all orders of a 6-vertex graph
    n = 6
    orders = [list(p) for p in permutations(range(n))]
    graphs = [random_edges(n, 12, s) for s in range(3 * scale)]
    runs = [(n, edges, order) for edges in graphs for order in orders]
    bench("greedy color count", pure.greedy_color_count,
          _native.greedy_color_count if _native else None, runs)

    # longest chain on mid-size graphs
    runs = [(16, random_edges(16, 40, s), list(range(16)))
            for s in range(60 * scale)]
    bench("longest ordered chain", pure.longest_ordered_chain,
          _native.longest_ordered_chain if _native else None, runs)

    # exact coloring: K_9 at its chromatic threshold (4 fails, 5 works)
    k9 = list(combinations(range(9), 3))
    order = list(range(9))
    runs = [(9, k9, 4, order, 0, 0.0), (9, k9, 5, order, 0, 0.0)] * (2 * scale)
    bench("k-colorability search", pure.kcolor_search,
          _native.kcolor_search if _native else None, runs)

    # maximum independent set on sparse 26-vertex graphs
    runs = [(26, random_edges(26, 40, s), 0, 0.0) for s in range(2 * scale)]
    bench("max independent set", pure.mis_search,
          _native.mis_search if _native else None, runs)


if __name__ == "__main__":
    main()
