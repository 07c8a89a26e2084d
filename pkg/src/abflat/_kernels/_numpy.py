"""Pure-numpy kernel implementations (reference / fallback backend)."""

import numpy as np


def segment_angles(xs, ys):
    """Signed angle subtended at the origin by each polyline segment.

    For consecutive vertices p, q the value is the principal angle
    arg(q) - arg(p) in (-pi, pi), i.e. atan2(p x q, p . q).  This equals the
    exact integral of (x dy - y dx)/(x^2 + y^2) along the straight segment,
    provided the segment avoids the origin.
    """
    x0, y0 = xs[:-1], ys[:-1]
    x1, y1 = xs[1:], ys[1:]
    return np.arctan2(x0 * y1 - y0 * x1, x0 * x1 + y0 * y1)


def origin_segment_distances(xs, ys):
    """Distance from the origin to each closed segment of a polyline.

    Zero-length segments yield the vertex distance.
    """
    ax, ay = xs[:-1], ys[:-1]
    bx, by = xs[1:], ys[1:]
    dx, dy = bx - ax, by - ay
    seg2 = dx * dx + dy * dy
    safe = np.where(seg2 > 0.0, seg2, 1.0)
    t = np.clip(-(ax * dx + ay * dy) / safe, 0.0, 1.0)
    t = np.where(seg2 > 0.0, t, 0.0)
    return np.hypot(ax + t * dx, ay + t * dy)


def phase_steps_stats(re, im):
    """Total unwrapped phase change and largest single step.

    Consecutive samples of a circle-valued map are compared through the
    principal value of their phase difference; the sum is the unwrapped
    total, valid as long as no true step exceeded pi.
    """
    cross = re[:-1] * im[1:] - im[:-1] * re[1:]
    dot = re[:-1] * re[1:] + im[:-1] * im[1:]
    steps = np.arctan2(cross, dot)
    if steps.size == 0:
        return 0.0, 0.0
    return float(steps.sum()), float(np.abs(steps).max())
