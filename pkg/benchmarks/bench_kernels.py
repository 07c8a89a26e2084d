#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs each hot kernel on large inputs with both backends, checks that the
results agree, and prints timings.  Run after `pip install -e .`:

    python benchmarks/bench_kernels.py [--size 2000000] [--repeat 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from abflat._kernels import _numpy as np_impl

try:
    from abflat._kernels import _numba as nb_impl
except ImportError:
    nb_impl = None


def _best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench(name, args, repeat, check):
    np_fn = getattr(np_impl, name)
    t_np, r_np = _best_of(np_fn, args, repeat)
    line = f"{name:28s} numpy {t_np * 1e3:9.2f} ms"
    if nb_impl is not None:
        nb_fn = getattr(nb_impl, name)
        nb_fn(*args)  # trigger compilation outside the timed region
        t_nb, r_nb = _best_of(nb_fn, args, repeat)
        check(r_np, r_nb)
        line += f"   numba {t_nb * 1e3:9.2f} ms   speedup {t_np / t_nb:5.2f}x"
    print(line)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=2_000_000)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    n = args.size
    angles = np.cumsum(rng.uniform(0.05, 0.4, size=n))
    radii = rng.uniform(0.5, 3.0, size=n)
    xs, ys = radii * np.cos(angles), radii * np.sin(angles)
    phases = np.cumsum(rng.uniform(-1.0, 1.2, size=n))
    re, im = np.cos(phases), np.sin(phases)

    if nb_impl is None:
        print("numba unavailable; timing the numpy fallback only")
    print(f"polyline of {n:,} vertices, best of {args.repeat}\n")

    allclose = lambda a, b: np.testing.assert_allclose(a, b, rtol=0, atol=1e-12)
    bench("segment_angles", (xs, ys), args.repeat, allclose)
    bench("origin_segment_distances", (xs, ys), args.repeat, allclose)
    bench(
        "phase_steps_stats",
        (re, im),
        args.repeat,
        lambda a, b: (
            np.testing.assert_allclose(a[0], b[0], atol=1e-6),
            np.testing.assert_allclose(a[1], b[1], atol=1e-12),
        ),
    )


if __name__ == "__main__":
    main()
