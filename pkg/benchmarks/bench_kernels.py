#!/usr/bin/env python3
"""Numba vs pure-numpy timings for the hot kernels.

Both flavours are called directly, so the SPIRALVORTEX_DISABLE_NUMBA flag
does not matter here. The first numba call (compilation) is excluded.
"""
import argparse
import math
import time

import numpy as np

from spiralvortex import _kernels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    print("warming up numba...")
    _kernels.rk4_linear_numba(0.1, 1.0, 1.0, 0.0, 1e-3, 10, 1e-12)
    z = np.ones(4)
    _kernels.closed_line_integral_numba(1.0, 1.0, z, z, z, z, 1.0)

    print(f"{'kernel':<22}{'size':>10}{'numpy (ms)':>14}{'numba (ms)':>14}{'ratio':>9}{'max diff':>12}")
    for n in (1_000, 10_000, 100_000, 1_000_000):
        h = 2 * math.pi / n
        run_np = lambda: _kernels.rk4_linear_numpy(-0.1, 1.0, 1.0, 0.0, h, n, 1e-12)  # noqa: E731
        run_nb = lambda: _kernels.rk4_linear_numba(-0.1, 1.0, 1.0, 0.0, h, n, 1e-12)  # noqa: E731
        t_np, t_nb = best_of(run_np, args.repeat), best_of(run_nb, args.repeat)
        diff = float(np.max(np.abs(run_np() - run_nb())))
        print(f"{'rk4_linear':<22}{n:>10}{t_np * 1e3:>14.3f}{t_nb * 1e3:>14.3f}{t_np / t_nb:>8.1f}x{diff:>12.2e}")

    rng = np.random.default_rng(0)
    for n in (1_024, 16_384, 262_144, 2_097_152):
        theta = 2 * math.pi * np.arange(n) / n
        zx, zy = 1.5 * np.cos(theta) + 0.2, 1.5 * np.sin(theta)
        dzx, dzy = -1.5 * np.sin(theta), 1.5 * np.cos(theta)
        w = 2 * math.pi / n
        a, b = rng.uniform(-2, 2, 2)
        run_np = lambda: _kernels.closed_line_integral_numpy(a, b, zx, zy, dzx, dzy, w)  # noqa: E731
        run_nb = lambda: _kernels.closed_line_integral_numba(a, b, zx, zy, dzx, dzy, w)  # noqa: E731
        t_np, t_nb = best_of(run_np, args.repeat), best_of(run_nb, args.repeat)
        diff = float(np.max(np.abs(np.subtract(run_np(), run_nb()))))
        print(f"{'closed_line_integral':<22}{n:>10}{t_np * 1e3:>14.3f}{t_nb * 1e3:>14.3f}{t_np / t_nb:>8.1f}x{diff:>12.2e}")


if __name__ == "__main__":
    main()
