#!/usr/bin/env python3
"""Compare the jitted kernels against the pure-numpy fallback.

Run from the repository root:

    python3 benchmarks/bench_kernels.py

Each kernel is timed on growing workloads; the table reports the best of
several repetitions.  Needs numba importable (do not set
TROPT_DISABLE_NUMBA, or both columns will time the same code).
"""

import time

import numpy as np

from tropt._kernels import (
    USING_NUMBA,
    grid_scan_numba,
    grid_scan_numpy,
    matmul_numba,
    matmul_numpy,
)

REPEAT = 7


def best_of(fn, *args):
    times = []
    for _ in range(REPEAT):
        start = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - start)
    return min(times)


def bench_matmul(rng):
    print(f"{'matmul (max-plus)':<28} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for n in (8, 32, 128, 512):
        a = rng.standard_normal((n, n))
        b = rng.standard_normal((n, n))
        matmul_numba(a, b, False, False)  # compile outside the timing
        t_np = best_of(matmul_numpy, a, b, False, False)
        t_nb = best_of(matmul_numba, a, b, False, False)
        print(f"  {n:>4} x {n:<18} {t_np * 1e3:>8.2f}ms {t_nb * 1e3:>8.2f}ms {t_np / t_nb:>7.1f}x")


def bench_grid_scan(rng):
    print(f"\n{'grid scan (max-plus, n=3)':<28} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    n = 3
    B = rng.integers(-6, 1, size=(n, n)).astype(float)
    g = np.full(n, -10.0)
    h = np.full(n, 10.0)
    p = rng.integers(-10, 11, size=n).astype(float)
    qc = rng.integers(-10, 11, size=n).astype(float)
    for points in (10**3, 10**4, 10**5, 10**6):
        X = rng.uniform(-10, 10, size=(points, n))
        args = (X, B, True, g, True, h, True, p, qc, False, False)
        grid_scan_numba(*args)
        t_np = best_of(grid_scan_numpy, *args)
        t_nb = best_of(grid_scan_numba, *args)
        print(f"  {points:>7} points{'':<10} {t_np * 1e3:>8.2f}ms {t_nb * 1e3:>8.2f}ms "
              f"{t_np / t_nb:>7.1f}x")


def main():
    if not USING_NUMBA:
        print("warning: numba path disabled or unavailable; "
              "both columns below time the same plain-python code")
    rng = np.random.default_rng(0)
    bench_matmul(rng)
    bench_grid_scan(rng)


if __name__ == "__main__":
    main()
