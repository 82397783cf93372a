"""Benchmark the compiled Monte-Carlo kernel against the NumPy fallback.

Both kernels classify the same pre-sampled batch, so the comparison is
pure hit-counting throughput; identical hit counts are asserted first.

Usage: python3 benchmarks/bench_mc.py [--n 4] [--samples 2000000] [--repeat 5]
"""

import argparse
import time

import numpy as np

from ghzpolytope import _mc_kernel_py
from ghzpolytope.mermin import mermin_threshold
from ghzpolytope.volume import MC_FAMILIES, _FAMILY_CODES, sample_simplex

try:
    from ghzpolytope import _mc_kernel
except ImportError:
    _mc_kernel = None


def bench(kernel, p, code, nu, repeat):
    best = float("inf")
    hits = None
    for _ in range(repeat):
        start = time.perf_counter()
        hits = kernel.count_hits(p, code, nu)
        best = min(best, time.perf_counter() - start)
    return hits, best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--samples", type=int, default=2_000_000)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.Generator(np.random.Philox(args.seed))
    p = sample_simplex(rng, args.samples, 2**args.n)
    nu = mermin_threshold(args.n)

    print(f"n={args.n}  samples={args.samples:,}  best of {args.repeat}")
    header = f"{'family':<18}{'python (s)':>12}{'cython (s)':>12}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for family in MC_FAMILIES:
        code = _FAMILY_CODES[family]
        hits_py, t_py = bench(_mc_kernel_py, p, code, nu, args.repeat)
        if _mc_kernel is None:
            print(f"{family:<18}{t_py:>12.4f}{'n/a':>12}{'n/a':>9}")
            continue
        hits_cy, t_cy = bench(_mc_kernel, p, code, nu, args.repeat)
        assert hits_py == hits_cy, f"kernel mismatch for {family}: {hits_py} != {hits_cy}"
        print(f"{family:<18}{t_py:>12.4f}{t_cy:>12.4f}{t_py / t_cy:>8.1f}x")
    if _mc_kernel is None:
        print("compiled kernel not built; showing the fallback only")


if __name__ == "__main__":
    main()
