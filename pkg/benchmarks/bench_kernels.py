#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallbacks.

Usage:
    python benchmarks/bench_kernels.py [--kappa 2000] [--farey-order 5000]
                                       [--sieve-n 2000000] [--repeat 3]

Prints one row per kernel with the best wall time for each backend and the
speedup.  Outputs are compared for equality on every run; a mismatch aborts.
"""

import argparse
import time

import numpy as np

from mediant import kernels


def best_time(fn, args, repeat):
    results = None
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        results = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, results


def run_case(name, args, repeat):
    kernels.set_backend("numba")
    kernels._get_numba_kernels()[name](*args)  # warm the JIT outside timing
    numba_time, numba_out = best_time(kernels._get_numba_kernels()[name], args, repeat)
    numpy_time, numpy_out = best_time(kernels._NUMPY_IMPLS[name], args, repeat)
    for a, b in zip(numba_out, numpy_out):
        if not np.array_equal(a, b):
            raise SystemExit(f"backend outputs differ for {name}{args}")
    ratio = numpy_time / numba_time if numba_time else float("inf")
    print(
        f"{name:<16} args={str(args):<16} numba {numba_time * 1000:9.2f} ms   "
        f"numpy {numpy_time * 1000:9.2f} ms   speedup x{ratio:5.1f}"
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kappa", type=int, default=2000)
    parser.add_argument("--farey-order", type=int, default=5000)
    parser.add_argument("--sieve-n", type=int, default=2_000_000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    phi = kernels._totient_sieve_np(args.farey_order)
    farey_size = 1 + int(phi[1 : args.farey_order + 1].sum())

    print(f"repeat={args.repeat}, best-of timing\n")
    run_case("trial_tally", (args.kappa,), args.repeat)
    run_case("extended_tally", (args.kappa // 2,), args.repeat)
    run_case("farey_pairs", (args.farey_order, farey_size), args.repeat)
    run_case("totient_sieve", (args.sieve_n,), args.repeat)


if __name__ == "__main__":
    main()
