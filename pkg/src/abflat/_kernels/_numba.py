"""Numba-jitted kernels, loop-for-loop equivalents of the numpy backend."""

import numpy as np
from numba import njit


@njit(cache=True)
def segment_angles(xs, ys):
    n = xs.shape[0] - 1
    out = np.empty(n, dtype=np.float64)
    for i in range(n):
        x0, y0 = xs[i], ys[i]
        x1, y1 = xs[i + 1], ys[i + 1]
        out[i] = np.arctan2(x0 * y1 - y0 * x1, x0 * x1 + y0 * y1)
    return out


@njit(cache=True)
def origin_segment_distances(xs, ys):
    n = xs.shape[0] - 1
    out = np.empty(n, dtype=np.float64)
    for i in range(n):
        ax, ay = xs[i], ys[i]
        dx, dy = xs[i + 1] - ax, ys[i + 1] - ay
        seg2 = dx * dx + dy * dy
        if seg2 > 0.0:
            t = -(ax * dx + ay * dy) / seg2
            if t < 0.0:
                t = 0.0
            elif t > 1.0:
                t = 1.0
        else:
            t = 0.0
        out[i] = np.hypot(ax + t * dx, ay + t * dy)
    return out


@njit(cache=True)
def phase_steps_stats(re, im):
    n = re.shape[0] - 1
    total = 0.0
    worst = 0.0
    for i in range(n):
        cross = re[i] * im[i + 1] - im[i] * re[i + 1]
        dot = re[i] * re[i + 1] + im[i] * im[i + 1]
        step = np.arctan2(cross, dot)
        total += step
        if abs(step) > worst:
            worst = abs(step)
    return total, worst
