"""u(1)-valued 1-forms on the punctured plane.

The objects here are flat connections A = lam * A0 + i*d(b), where A0 is the
canonical angular form and b is a real scalar field (the iR-valued potential
beta = i*b).  Lie-algebra values live in iR throughout, stored as the real
coefficient of i: a function documented as returning "the integral of A"
returns the real number c with integral = i*c.

The canonical part is always integrated exactly through segment angles;
Gauss quadrature exists only for caller-supplied sampled fields and as an
independent numerical cross-check.  Field callables take coordinates as
floats or numpy arrays (broadcasting both ways) and must be safe to call
concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import QuadratureNoConvergence
from .geometry import PolyPath, PuncturedPoint, _as_point, path_angle_sum, validate_path

QUAD_ORDER = 8
TOL_QUAD = 1e-10
REFINE_LIMIT = 12
TOL_GRAD = 1e-6
TOL_FLAT = 1e-6

# Near-optimal central-difference step factor for float64.
_FD_STEP = float(np.cbrt(np.finfo(np.float64).eps))


@dataclass(frozen=True)
class ScalarField:
    """A real scalar field b with its analytic gradient.

    Represents the iR-valued 0-form beta = i*b.  `value(x, y) -> b` and
    `gradient(x, y) -> (db/dx, db/dy)` must accept floats or arrays.  The
    gradient is caller-supplied, never differenced numerically, so that
    d(beta) contributions stay noise-free; `verify_field` checks the pair
    for consistency.
    """

    value: Callable
    gradient: Callable
    description: str = ""

    def value_at(self, p: PuncturedPoint) -> float:
        return float(self.value(p.x, p.y))

    def gradient_at(self, p: PuncturedPoint) -> tuple[float, float]:
        gx, gy = self.gradient(p.x, p.y)
        return float(gx), float(gy)

    def __add__(self, other: "ScalarField") -> "ScalarField":
        def value(x, y):
            return self.value(x, y) + other.value(x, y)

        def gradient(x, y):
            ax, ay = self.gradient(x, y)
            bx, by = other.gradient(x, y)
            return ax + bx, ay + by

        desc = f"({self.description or 'b1'} + {other.description or 'b2'})"
        return ScalarField(value, gradient, desc)


@dataclass(frozen=True)
class FlatConnection:
    """A flat u(1) connection lam * A0 + i*d(b).

    `lam` is the coefficient of the canonical form A0 (units of charge);
    `exact_part` is the scalar field b of an optional exact term.  Closedness
    holds by construction: A0 is closed off the puncture and d(d b) = 0.
    """

    lam: float
    exact_part: ScalarField | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", float(self.lam))


@dataclass(frozen=True)
class SampledCovectorField:
    """A black-box 1-form i*(a_x dx + a_y dy) given by sampled components.

    `components(x, y) -> (a_x, a_y)`, floats or arrays.
    """

    components: Callable
    description: str = ""


def canonical_a0_at(
    p: PuncturedPoint | Sequence[float], e_abs: float
) -> tuple[float, float]:
    """(dx, dy) components of the canonical form a0 at a point.

    a0 = (1/|e|) * (x dy - y dx)/(x^2 + y^2), so the components are
    (-y, x) / (|e| * (x^2 + y^2)).
    """
    if e_abs <= 0.0:
        raise ValueError(f"e_abs must be positive, got {e_abs}")
    p = _as_point(p)
    r2 = p.x * p.x + p.y * p.y
    return (-p.y / (e_abs * r2), p.x / (e_abs * r2))


def canonical_field(e_abs: float) -> SampledCovectorField:
    """The canonical form a0 packaged for the sampling integrator."""
    if e_abs <= 0.0:
        raise ValueError(f"e_abs must be positive, got {e_abs}")

    def components(x, y):
        r2 = x * x + y * y
        return -y / (e_abs * r2), x / (e_abs * r2)

    return SampledCovectorField(components, description=f"a0 (e_abs={e_abs})")


def connection_field(conn: FlatConnection, e_abs: float) -> SampledCovectorField:
    """Real components a with A = i*a for a whole connection.

    Useful to feed a FlatConnection through the quadrature/flatness oracles.
    """
    if e_abs <= 0.0:
        raise ValueError(f"e_abs must be positive, got {e_abs}")

    def components(x, y):
        r2 = x * x + y * y
        ax = -conn.lam * y / (e_abs * r2)
        ay = conn.lam * x / (e_abs * r2)
        if conn.exact_part is not None:
            gx, gy = conn.exact_part.gradient(x, y)
            ax = ax + gx
            ay = ay + gy
        return ax, ay

    return SampledCovectorField(components, description=f"lam={conn.lam} connection")


def line_integral(conn: FlatConnection, path: PolyPath, e_abs: float) -> float:
    """Integral of the connection along the path, as the coefficient of i.

    The canonical term is (lam/|e|) * (sum of exact segment angles); the
    exact part contributes b(end) - b(start) by the fundamental theorem of
    calculus, hence exactly 0 on closed paths.
    """
    if e_abs <= 0.0:
        raise ValueError(f"e_abs must be positive, got {e_abs}")
    total = 0.0
    if conn.lam != 0.0:
        total += (conn.lam / e_abs) * path_angle_sum(path)
    if conn.exact_part is not None and not path.closed:
        b = conn.exact_part
        total += float(b.value(path.xs[-1], path.ys[-1])) - float(
            b.value(path.xs[0], path.ys[0])
        )
    return total


_gauss_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    rule = _gauss_cache.get(order)
    if rule is None:
        rule = np.polynomial.legendre.leggauss(order)
        _gauss_cache[order] = rule
    return rule


def _quad_pass(
    components: Callable,
    path: PolyPath,
    nodes: np.ndarray,
    weights: np.ndarray,
    subdiv: int,
) -> float:
    dx = np.diff(path.xs)
    dy = np.diff(path.ys)
    # Gauss points of every piece of every segment, in segment parameter u.
    u = (np.arange(subdiv)[:, None] + (nodes[None, :] + 1.0) / 2.0) / subdiv
    px = path.xs[:-1, None, None] + dx[:, None, None] * u[None, :, :]
    py = path.ys[:-1, None, None] + dy[:, None, None] * u[None, :, :]
    fx, fy = components(px.ravel(), py.ravel())
    fx = np.broadcast_to(np.asarray(fx, dtype=np.float64), px.size).reshape(px.shape)
    fy = np.broadcast_to(np.asarray(fy, dtype=np.float64), px.size).reshape(px.shape)
    integrand = fx * dx[:, None, None] + fy * dy[:, None, None]
    return float((integrand * weights[None, None, :]).sum() / (2.0 * subdiv))


def line_integral_sampled(
    field: SampledCovectorField,
    path: PolyPath,
    quad_order: int | None = None,
    refine_limit: int | None = None,
    tol_quad: float | None = None,
) -> float:
    """Gauss quadrature of a sampled 1-form along a path, as coefficient of i.

    Fixed-order Gauss-Legendre per segment, with uniform subdivision doubled
    until two successive passes agree to `tol_quad` relative error.  Raises
    QuadratureNoConvergence after `refine_limit` doublings.
    """
    quad_order = QUAD_ORDER if quad_order is None else quad_order
    refine_limit = REFINE_LIMIT if refine_limit is None else refine_limit
    tol_quad = TOL_QUAD if tol_quad is None else tol_quad
    if quad_order < 2:
        raise ValueError(f"quad_order must be >= 2, got {quad_order}")
    nodes, weights = _gauss_rule(quad_order)

    prev: float | None = None
    subdiv = 1
    for _ in range(refine_limit + 1):
        val = _quad_pass(field.components, path, nodes, weights, subdiv)
        if prev is not None and abs(val - prev) <= tol_quad * max(
            1.0, abs(val), abs(prev)
        ):
            return val
        prev = val
        subdiv *= 2
    raise QuadratureNoConvergence(
        f"no agreement to {tol_quad} after {refine_limit} doublings "
        f"(last two values {prev!r} and earlier pass)"
    )


@dataclass(frozen=True)
class FlatnessReport:
    """Outcome of circulation probes; truthy iff every probe passed."""

    ok: bool
    threshold: float
    circulations: tuple[float, ...]

    def __bool__(self) -> bool:
        return self.ok


def verify_flat(
    field: SampledCovectorField,
    region: Iterable[PuncturedPoint | Sequence[float]],
    probe_radius: float,
    tol_flat: float | None = None,
    quad_order: int | None = None,
) -> FlatnessReport:
    """Check dA = 0 by small-loop circulations (Stokes).

    Around each probe point the field is integrated over a square loop of
    side `probe_radius`; circulation ~ (dA) * area, so the pass criterion is
    |circulation| < tol_flat * probe_radius^2 at every probe.  Probes must
    keep the whole loop clear of the puncture.
    """
    tol_flat = TOL_FLAT if tol_flat is None else tol_flat
    h = probe_radius / 2.0
    circulations = []
    for p in region:
        p = _as_point(p)
        square = validate_path(
            [
                (p.x - h, p.y - h),
                (p.x + h, p.y - h),
                (p.x + h, p.y + h),
                (p.x - h, p.y + h),
                (p.x - h, p.y - h),
            ],
            closed=True,
        )
        circulations.append(line_integral_sampled(field, square, quad_order=quad_order))
    threshold = tol_flat * probe_radius * probe_radius
    ok = all(abs(c) < threshold for c in circulations)
    return FlatnessReport(ok, threshold, tuple(circulations))


@dataclass(frozen=True)
class GradientReport:
    """Outcome of gradient consistency checks; truthy iff every point passed."""

    ok: bool
    tol: float
    errors: tuple[float, ...]
    worst: float

    def __bool__(self) -> bool:
        return self.ok


def verify_field(
    field: ScalarField,
    sample_points: Iterable[PuncturedPoint | Sequence[float]],
    tol_grad: float | None = None,
) -> GradientReport:
    """Compare the supplied gradient with central differences of the value.

    A point passes when the mismatch norm is within `tol_grad` of the
    gradient norm (absolute tolerance 1e-9 where the gradient vanishes).
    Sample points must keep the difference stencil off the puncture.
    """
    tol_grad = TOL_GRAD if tol_grad is None else tol_grad
    errors = []
    ok = True
    for p in sample_points:
        p = _as_point(p)
        hx = _FD_STEP * max(1.0, abs(p.x))
        hy = _FD_STEP * max(1.0, abs(p.y))
        fdx = (float(field.value(p.x + hx, p.y)) - float(field.value(p.x - hx, p.y))) / (
            2.0 * hx
        )
        fdy = (float(field.value(p.x, p.y + hy)) - float(field.value(p.x, p.y - hy))) / (
            2.0 * hy
        )
        gx, gy = field.gradient_at(p)
        err = math.hypot(fdx - gx, fdy - gy)
        errors.append(err)
        if err > max(tol_grad * math.hypot(gx, gy), 1e-9):
            ok = False
    worst = max(errors) if errors else 0.0
    return GradientReport(ok, tol_grad, tuple(errors), worst)


def polynomial_field(coeffs: Iterable[Sequence[float]]) -> ScalarField:
    """b(x, y) = sum of c * x^i * y^j over (i, j, c) rows, exact gradient."""
    terms = tuple((int(i), int(j), float(c)) for i, j, c in coeffs)

    def value(x, y):
        out = x * 0.0
        for i, j, c in terms:
            out = out + c * x**i * y**j
        return out

    def gradient(x, y):
        gx = x * 0.0
        gy = x * 0.0
        for i, j, c in terms:
            if i:
                gx = gx + c * i * x ** (i - 1) * y**j
            if j:
                gy = gy + c * j * x**i * y ** (j - 1)
        return gx, gy

    desc = "poly[" + ", ".join(f"{c}*x^{i}*y^{j}" for i, j, c in terms) + "]"
    return ScalarField(value, gradient, desc)


def radial_log_field(c: float) -> ScalarField:
    """b(x, y) = c * ln(x^2 + y^2), the rotationally symmetric exact part."""
    c = float(c)

    def value(x, y):
        return c * np.log(x * x + y * y)

    def gradient(x, y):
        r2 = x * x + y * y
        return 2.0 * c * x / r2, 2.0 * c * y / r2

    return ScalarField(value, gradient, f"radial_log(c={c})")


ZERO_FIELD = ScalarField(
    value=lambda x, y: x * 0.0,
    gradient=lambda x, y: (x * 0.0, x * 0.0),
    description="0",
)
