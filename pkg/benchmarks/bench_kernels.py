"""Benchmark the all-pairs routing kernels: compiled extension vs pure Python.

Runs both backends on the same generated instances, reports wall times
and speedups, and cross-checks that the outcome/hop arrays agree bit for
bit (a disagreement is a bug, not a performance result).

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py -n 100,200,400 --seeds 3 --repeat 5
"""

import argparse
import time

import numpy as np

from trigreedy import (
    Strategy,
    compute_drawing,
    compute_realizer,
    extract_saturated,
    generate_stacked,
    kernels,
    randomize_flips,
)


def build(n, seed):
    tri = randomize_flips(generate_stacked(n, seed=seed), 10 * n, seed=seed)
    drawing = compute_drawing(tri, compute_realizer(tri))
    return tri, drawing, extract_saturated(tri, drawing)


def run(backend, tri, drawing, sat, strategy, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = kernels.all_pairs(tri, drawing, sat, strategy, tri.n, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("-n", default="50,100,200", help="comma-separated instance sizes")
    parser.add_argument("--seeds", type=int, default=3, help="instances per size (seeds 0..k-1)")
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions, best-of")
    args = parser.parse_args()

    sizes = [int(s) for s in args.n.split(",")]
    if kernels._compiled is None:
        print("compiled kernels unavailable; timing the pure backend only")
    print(f"{'n':>6} {'strategy':>10} {'pure':>10} {'compiled':>10} {'speedup':>8}")

    for n in sizes:
        for strategy in (Strategy.SECTOR, Strategy.EUCLIDEAN):
            pure_total = comp_total = 0.0
            for seed in range(args.seeds):
                tri, drawing, sat = build(n, seed)
                t_pure, (out_p, hops_p) = run("pure", tri, drawing, sat, strategy, args.repeat)
                pure_total += t_pure
                if kernels._compiled is None:
                    continue
                t_comp, (out_c, hops_c) = run("compiled", tri, drawing, sat, strategy, args.repeat)
                comp_total += t_comp
                if not (np.array_equal(out_p, out_c) and np.array_equal(hops_p, hops_c)):
                    raise SystemExit(f"backend mismatch at n={n} seed={seed} {strategy.value}")
            if kernels._compiled is None:
                print(f"{n:>6} {strategy.value:>10} {pure_total:>9.3f}s {'-':>10} {'-':>8}")
            else:
                speed = pure_total / comp_total if comp_total else float("inf")
                print(
                    f"{n:>6} {strategy.value:>10} {pure_total:>9.3f}s {comp_total:>9.3f}s {speed:>7.1f}x"
                )
    print("outcome and hop arrays matched across backends")


if __name__ == "__main__":
    main()
