"""The gauge group of circle-valued maps on the punctured plane.

Gauge maps are kept in constructive form: a winding map w_n sending a point
at angle phi to e^{i n phi}, an exponentiated scalar field e^{i b}, or a
finite product of those.  Every gauge class contains exactly this data (a
winding integer plus an exact part), and on that representation the action
on connections is exact arithmetic instead of numerical differentiation:

    w_n      shifts the canonical coefficient by n * |e|
    e^{i b}  adds the exact part d(i b)

Arbitrary circle-valued callables are accepted only by `map_winding`, which
needs nothing but samples on the unit circle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

import numpy as np

from . import _kernels
from .errors import GradientInconsistent, SamplingUnresolved, WindingNotInteger
from .forms import FlatConnection, ScalarField, verify_field
from .geometry import TOL_WINDING, TWO_PI, PuncturedPoint, _as_point

SAMPLE_COUNT = 256
REFINE_LIMIT = 8
# Largest tolerated single phase step when unwrapping circle samples; half of
# the pi aliasing bound, so one doubling always restores the margin.
STEP_THRESHOLD = math.pi / 2.0


@dataclass(frozen=True)
class WindingMap:
    """The map sending a point at angle phi to e^{i n phi}."""

    n: int


@dataclass(frozen=True)
class ExpBeta:
    """The null-homotopic map e^{i b} for a globally defined scalar b."""

    beta: ScalarField


@dataclass(frozen=True)
class Product:
    """Pointwise product of two gauge maps."""

    left: "GaugeMap"
    right: "GaugeMap"


GaugeMap = Union[WindingMap, ExpBeta, Product]

IDENTITY = WindingMap(0)


def construct_fn(n: int) -> WindingMap:
    """The winding-n gauge map, normalized to 1 on the positive x-axis."""
    return WindingMap(int(n))


def _default_verification_ring() -> list[PuncturedPoint]:
    pts = []
    for r in (0.7, 1.3, 2.9):
        for k in range(8):
            a = TWO_PI * (k + 0.37) / 8.0
            pts.append(PuncturedPoint(r * math.cos(a), r * math.sin(a)))
    return pts


def exp_sharp(
    beta: ScalarField,
    sample_points: Iterable[PuncturedPoint | Sequence[float]] | None = None,
) -> ExpBeta:
    """Exponentiate a scalar field into the gauge group.

    The field's analytic gradient is checked against finite differences
    first (GradientInconsistent on failure); pass `sample_points` when the
    default ring of radii 0.7/1.3/2.9 is outside the field's safe domain.
    """
    points = (
        list(sample_points) if sample_points is not None else _default_verification_ring()
    )
    report = verify_field(beta, points)
    if not report:
        raise GradientInconsistent(
            f"gradient of {beta.description or 'beta'} disagrees with finite "
            f"differences (worst mismatch {report.worst:.3e})"
        )
    return ExpBeta(beta)


def evaluate_map_array(f: GaugeMap, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Unit-complex values of a constructive gauge map at arrays of points."""
    if isinstance(f, WindingMap):
        return np.exp(1j * f.n * np.arctan2(ys, xs))
    if isinstance(f, ExpBeta):
        b = np.asarray(f.beta.value(xs, ys), dtype=np.float64)
        return np.exp(1j * b)
    if isinstance(f, Product):
        return evaluate_map_array(f.left, xs, ys) * evaluate_map_array(f.right, xs, ys)
    raise TypeError(f"not a constructive gauge map: {f!r}")


def evaluate_map(f: GaugeMap, p: PuncturedPoint | Sequence[float]) -> complex:
    """Value of the gauge map at one point; modulus 1 up to rounding."""
    p = _as_point(p)
    if isinstance(f, WindingMap):
        return cmath.exp(1j * f.n * math.atan2(p.y, p.x))
    if isinstance(f, ExpBeta):
        return cmath.exp(1j * f.beta.value_at(p))
    if isinstance(f, Product):
        return evaluate_map(f.left, p) * evaluate_map(f.right, p)
    raise TypeError(f"not a constructive gauge map: {f!r}")


def _unwrap_on_circle(f: GaugeMap | Callable, samples: int) -> tuple[float, float]:
    """Total unwrapped phase and worst step over `samples` uniform intervals."""
    theta = np.linspace(0.0, TWO_PI, samples + 1)
    xs, ys = np.cos(theta), np.sin(theta)
    xs[-1], ys[-1] = xs[0], ys[0]
    if isinstance(f, (WindingMap, ExpBeta, Product)):
        values = evaluate_map_array(f, xs, ys)
    else:
        values = np.asarray(f(xs, ys), dtype=np.complex128)
    return _kernels.phase_steps_stats(
        np.ascontiguousarray(values.real), np.ascontiguousarray(values.imag)
    )


def map_winding(
    f: GaugeMap | Callable,
    sample_count: int | None = None,
    refine_limit: int | None = None,
    tol_winding: float | None = None,
) -> int:
    """Homotopy class of a circle-valued map, as its winding on |z| = 1.

    The map is sampled at uniform angles and the phase unwrapped through
    principal-value steps.  Each density m is cross-checked against m + 1
    samples: a uniform winding aliased at one density cannot produce the
    same integer at both.  Whenever a step exceeds pi/2 or the densities
    disagree, the sampling doubles (up to `refine_limit` times, then
    SamplingUnresolved).  The total phase change must land within
    `tol_winding` of 2*pi*Z.

    `f` may be any callable `(x_array, y_array) -> complex array` in addition
    to the constructive gauge maps.
    """
    m = SAMPLE_COUNT if sample_count is None else int(sample_count)
    refine_limit = REFINE_LIMIT if refine_limit is None else refine_limit
    tol_winding = TOL_WINDING if tol_winding is None else tol_winding
    if m < 8:
        raise ValueError(f"sample_count must be >= 8, got {m}")

    for _ in range(refine_limit + 1):
        total_a, worst_a = _unwrap_on_circle(f, m)
        total_b, worst_b = _unwrap_on_circle(f, m + 1)
        if max(worst_a, worst_b) <= STEP_THRESHOLD:
            if not (math.isfinite(total_a) and math.isfinite(total_b)):
                raise WindingNotInteger("non-finite phase data on the unit circle")
            n_a = round(total_a / TWO_PI)
            n_b = round(total_b / TWO_PI)
            off_a = abs(total_a - TWO_PI * n_a)
            off_b = abs(total_b - TWO_PI * n_b)
            if max(off_a, off_b) > tol_winding:
                raise WindingNotInteger(
                    f"unwrapped phase {total_a!r} is not within {tol_winding} of 2*pi*Z"
                )
            if n_a == n_b:
                return int(n_a)
        m *= 2
    raise SamplingUnresolved(
        f"circle sampling still aliased or under-resolved at {m} samples"
    )


def gauge_apply(conn: FlatConnection, f: GaugeMap, e_abs: float) -> FlatConnection:
    """Act on a connection: A -> A + (winding shift and/or exact part).

    A winding map w_n contributes w_n^{-1} d w_n = i n d(phi) = n|e| * A0,
    so the canonical coefficient moves by n * e_abs; an exponentiated field
    adds its differential to the exact part; products apply left to right.
    """
    if e_abs <= 0.0:
        raise ValueError(f"e_abs must be positive, got {e_abs}")
    if isinstance(f, WindingMap):
        return FlatConnection(conn.lam + f.n * e_abs, conn.exact_part)
    if isinstance(f, ExpBeta):
        combined = f.beta if conn.exact_part is None else conn.exact_part + f.beta
        return FlatConnection(conn.lam, combined)
    if isinstance(f, Product):
        return gauge_apply(gauge_apply(conn, f.left, e_abs), f.right, e_abs)
    raise TypeError(f"not a constructive gauge map: {f!r}")
