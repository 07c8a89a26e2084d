"""Points of the punctured plane, polyline paths, and winding numbers.

Paths are piecewise linear on purpose: the angular form
(x dy - y dx)/(x^2 + y^2) integrates exactly over a straight segment as the
principal angle between its endpoints, so winding numbers and canonical
periods carry only rounding error, never quadrature error.  Smooth curves
must be discretized by the caller.

All types are immutable and all functions are pure; nothing here holds
shared mutable state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import (
    DegeneratePath,
    NotClosed,
    SegmentThroughOrigin,
    VertexAtOrigin,
    WindingNotInteger,
)

# Exclusion radius around the puncture, in plane units.  Loops may come as
# close as they like above this; anything at or below is rejected.
EPS_ORIGIN = 1e-9

# Allowed deviation of a closed loop's raw angle sum from 2*pi*Z, in radians.
# The per-segment integrator is exact up to rounding, so a miss by more than
# this signals corrupted geometry rather than discretization error.
TOL_WINDING = 1e-6

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PuncturedPoint:
    """A point of the plane with the origin removed."""

    x: float
    y: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise VertexAtOrigin(f"non-finite coordinates ({self.x}, {self.y})")
        if math.hypot(self.x, self.y) <= EPS_ORIGIN:
            raise VertexAtOrigin(
                f"point ({self.x}, {self.y}) is within {EPS_ORIGIN} of the puncture"
            )

    def radius(self) -> float:
        return math.hypot(self.x, self.y)


def _as_point(p: PuncturedPoint | Sequence[float]) -> PuncturedPoint:
    if isinstance(p, PuncturedPoint):
        return p
    x, y = p
    return PuncturedPoint(x, y)


@dataclass(frozen=True)
class PolyPath:
    """A piecewise-linear path in the punctured plane.

    `xs`/`ys` hold the vertex coordinates (read-only arrays, length >= 2);
    `closed` paths repeat the first vertex bitwise as the last.  Build through
    `validate_path`, which enforces the origin clearance of every segment.
    """

    xs: np.ndarray
    ys: np.ndarray
    closed: bool

    @property
    def vertices(self) -> tuple[PuncturedPoint, ...]:
        return tuple(PuncturedPoint(x, y) for x, y in zip(self.xs, self.ys))

    @property
    def segment_count(self) -> int:
        return len(self.xs) - 1

    def reversed(self) -> "PolyPath":
        """The same path traversed backwards."""
        return PolyPath(
            _readonly(self.xs[::-1].copy()), _readonly(self.ys[::-1].copy()), self.closed
        )


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _segment_clearances(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    return _kernels.origin_segment_distances(xs, ys)


def validate_path(
    vertices: Iterable[Sequence[float]],
    closed: bool,
    eps_origin: float | None = None,
) -> PolyPath:
    """Check a vertex list and wrap it as a PolyPath.

    Raises VertexAtOrigin, SegmentThroughOrigin, DegeneratePath or NotClosed;
    see the error docstrings.  `eps_origin` overrides the module default for
    this call only.
    """
    eps_origin = EPS_ORIGIN if eps_origin is None else eps_origin
    coords = [(float(x), float(y)) for x, y in vertices]
    if len(coords) < 2 or len(set(coords)) < 2:
        raise DegeneratePath(f"need at least 2 distinct vertices, got {coords!r}")

    xs = np.asarray([c[0] for c in coords], dtype=np.float64)
    ys = np.asarray([c[1] for c in coords], dtype=np.float64)
    if not (np.isfinite(xs).all() and np.isfinite(ys).all()):
        raise VertexAtOrigin("non-finite vertex coordinates")

    r = np.hypot(xs, ys)
    if (r <= eps_origin).any():
        i = int(np.argmin(r))
        raise VertexAtOrigin(
            f"vertex {i} at ({xs[i]}, {ys[i]}) is within {eps_origin} of the puncture"
        )

    dx, dy = np.diff(xs), np.diff(ys)
    zero = (dx == 0.0) & (dy == 0.0)
    if zero.any():
        i = int(np.argmax(zero))
        raise DegeneratePath(f"zero-length segment at index {i}")

    if closed and (coords[0] != coords[-1]):
        raise NotClosed(
            f"closed path requested but endpoints differ: {coords[0]} vs {coords[-1]}"
        )

    clear = _segment_clearances(xs, ys)
    if (clear <= eps_origin).any():
        i = int(np.argmin(clear))
        raise SegmentThroughOrigin(
            f"segment {i} passes within {eps_origin} of the puncture "
            f"(clearance {clear[i]:.3e})"
        )

    return PolyPath(_readonly(xs), _readonly(ys), closed)


def segment_angle(
    p: PuncturedPoint | Sequence[float],
    q: PuncturedPoint | Sequence[float],
    eps_origin: float | None = None,
) -> float:
    """Exact integral of (x dy - y dx)/(x^2+y^2) along the segment p -> q.

    Equals the principal-value angle arg(q) - arg(p) in (-pi, pi); a straight
    segment clear of the origin subtends strictly less than pi.
    """
    eps_origin = EPS_ORIGIN if eps_origin is None else eps_origin
    p, q = _as_point(p), _as_point(q)
    xs = np.asarray([p.x, q.x])
    ys = np.asarray([p.y, q.y])
    clear = float(_segment_clearances(xs, ys)[0])
    if clear <= eps_origin:
        raise SegmentThroughOrigin(
            f"segment ({p.x},{p.y}) -> ({q.x},{q.y}) passes within "
            f"{eps_origin} of the puncture (clearance {clear:.3e})"
        )
    return math.atan2(p.x * q.y - p.y * q.x, p.x * q.x + p.y * q.y)


def path_angle_sum(path: PolyPath) -> float:
    """Sum of exact segment angles along the path (open or closed)."""
    return float(_kernels.segment_angles(path.xs, path.ys).sum())


def winding_number(loop: PolyPath, tol_winding: float | None = None) -> int:
    """Winding of a closed loop about the puncture (counterclockwise = +1).

    The raw angle sum must land within `tol_winding` of 2*pi*Z, otherwise
    WindingNotInteger is raised: with an exact per-segment integrator a miss
    means the path data is corrupt, not that more resolution is needed.
    """
    tol_winding = TOL_WINDING if tol_winding is None else tol_winding
    if not loop.closed:
        raise NotClosed("winding_number requires a closed loop")
    total = path_angle_sum(loop)
    n = round(total / TWO_PI)
    if abs(total - TWO_PI * n) > tol_winding:
        raise WindingNotInteger(
            f"angle sum {total!r} is {abs(total - TWO_PI * n):.3e} rad away "
            f"from the nearest multiple of 2*pi"
        )
    return int(n)


def concatenate(first: PolyPath, second: PolyPath) -> PolyPath:
    """Join two paths where `first` ends exactly at `second`'s start.

    The shared vertex appears once.  The result is closed iff its own
    endpoints coincide bitwise (e.g. two loops based at the same point).
    """
    if (first.xs[-1], first.ys[-1]) != (second.xs[0], second.ys[0]):
        raise DegeneratePath(
            "cannot concatenate: first path ends at "
            f"({first.xs[-1]}, {first.ys[-1]}), second starts at "
            f"({second.xs[0]}, {second.ys[0]})"
        )
    xs = np.concatenate([first.xs, second.xs[1:]])
    ys = np.concatenate([first.ys, second.ys[1:]])
    closed = (xs[0], ys[0]) == (xs[-1], ys[-1])
    return PolyPath(_readonly(xs), _readonly(ys), bool(closed))


def regular_polygon(
    sides: int, radius: float = 1.0, center: tuple[float, float] = (0.0, 0.0)
) -> PolyPath:
    """A closed counterclockwise regular polygon, first vertex at angle 0."""
    theta = np.linspace(0.0, TWO_PI, sides + 1)
    xs = center[0] + radius * np.cos(theta)
    ys = center[1] + radius * np.sin(theta)
    xs[-1], ys[-1] = xs[0], ys[0]
    return validate_path(np.column_stack([xs, ys]), closed=True)
