"""Periods, holonomy, the moduli circle, and holonomy-group classification.

The de Rham cohomology of the punctured plane in degree one is a line, so a
single period over any winding-one loop pins down a flat connection's class
up to gauge; the full gauge group then folds that line to a circle of
circumference |e|.  Holonomy groups come out as Z_q for rational holonomy
parameter p/q and as a dense infinite cyclic group otherwise.

Sign convention used everywhere: holonomy(A, loop) = exp(+ integral of A),
with counterclockwise loops winding +1.  Flipping it would conjugate every
holonomy; reports carry the convention string so results are unambiguous.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import NonPositiveAlpha, NotClosed, NotGenerator
from .forms import FlatConnection, line_integral
from .geometry import TWO_PI, PolyPath, winding_number

DEFAULT_ALPHA = 1 / 137.04
Q_MAX = 10**6
RATIONAL_TOL = 1e-9
EQUIV_TOL = 1e-9

# sqrt(hbar * c) in (erg * cm)^(1/2); multiplies a natural-unit charge to
# express it in cgs units.  hbar = 1.054571817e-27 erg s, c = 2.99792458e10
# cm/s.  Display-only: the library computes in natural units.
SQRT_HBAR_C_CGS = 5.622745567389264e-09

CONVENTION_NOTES = (
    "holonomy(A, loop) = exp(+ integral of A along loop); "
    "counterclockwise winding counts +1; "
    "lambda is the coefficient of the canonical form A0 (the gauge shift is "
    "exactly lambda -> lambda + |e|), and the reported flux is rho * phi0"
)


@dataclass(frozen=True)
class PhysicalConstants:
    """Charge and flux scales derived from the fine structure constant."""

    alpha: float
    e_abs: float
    phi0: float
    planck_length: float | None = None
    kk_length: float | None = None

    def e_abs_cgs(self) -> float:
        """|e| expressed in (erg * cm)^(1/2); display-only conversion."""
        return self.e_abs * SQRT_HBAR_C_CGS


def make_constants(alpha: float, planck_length: float | None = None) -> PhysicalConstants:
    """Derive |e| = sqrt(4*pi*alpha), phi0 = 2*pi/|e|, and the compactification
    length 2*pi*planck_length/|e| when a Planck length is supplied."""
    alpha = float(alpha)
    if not alpha > 0.0:
        raise NonPositiveAlpha(f"alpha must be positive, got {alpha}")
    e_abs = math.sqrt(4.0 * math.pi * alpha)
    phi0 = TWO_PI / e_abs
    kk_length = None
    if planck_length is not None:
        kk_length = TWO_PI * float(planck_length) / e_abs
    return PhysicalConstants(alpha, e_abs, phi0, planck_length, kk_length)


@dataclass(frozen=True)
class ModuliCoordinate:
    """A point of the moduli circle: lambda mod |e|, with circle angle theta
    = 2*pi*lambda_mod/|e| and holonomy parameter rho = lambda_mod/|e|."""

    lambda_mod: float
    theta: float
    rho: float


def reduce_to_moduli(lam: float, consts: PhysicalConstants) -> ModuliCoordinate:
    """Fold a canonical coefficient onto [0, |e|).

    Values within 1e-12 of |e| snap to 0 (the two ends of the interval are
    the same point of the circle).
    """
    e = consts.e_abs
    m = lam - e * math.floor(lam / e)
    if abs(m - e) < 1e-12 or m < 0.0:
        m = 0.0
    return ModuliCoordinate(m, TWO_PI * m / e, m / e)


@dataclass(frozen=True)
class ExactRational:
    """rho = p/q exactly, reduced, with 0 <= p/q < 1.  Build via exact_rational."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 1 or not 0 <= self.p < self.q or math.gcd(self.p, self.q) != 1:
            raise ValueError(
                f"ExactRational({self.p}, {self.q}) is not reduced into [0, 1); "
                "use exact_rational()"
            )

    def value(self) -> float:
        return self.p / self.q


@dataclass(frozen=True)
class DeclaredIrrational:
    """A caller-certified irrational rho; the float is only its working value."""

    description: str
    value: float


@dataclass(frozen=True)
class FloatRatio:
    """A bare floating-point rho; can witness rationality, never irrationality."""

    value: float


FluxRatio = Union[ExactRational, DeclaredIrrational, FloatRatio]


def exact_rational(p: int, q: int) -> ExactRational:
    """Normalize p/q into [0, 1) and lowest terms."""
    if q <= 0:
        raise ValueError(f"denominator must be a positive integer, got {q}")
    f = Fraction(int(p), int(q)) % 1
    return ExactRational(f.numerator, f.denominator)


@dataclass(frozen=True)
class Trivial:
    """The one-element holonomy group."""


@dataclass(frozen=True)
class Cyclic:
    """The group of q-th roots of unity, q >= 2."""

    order: int

    def __post_init__(self) -> None:
        if self.order < 2:
            raise ValueError(f"Cyclic order must be >= 2, got {self.order}; use Trivial")


@dataclass(frozen=True)
class InfiniteCyclic:
    """A dense infinite cyclic subgroup of the circle."""


HolonomyGroup = Union[Trivial, Cyclic, InfiniteCyclic]


@dataclass(frozen=True)
class Classification:
    """A holonomy group plus how it was decided; truthiness not defined."""

    group: HolonomyGroup
    diagnostics: dict = field(default_factory=dict)


def period(conn: FlatConnection, generator: PolyPath, consts: PhysicalConstants) -> float:
    """Extract the canonical coefficient lambda from one generator period.

    lambda = (|e|/2*pi) * (integral of A) / winding; exact parts drop out on
    the closed generator, so this recovers the coefficient of A0.
    """
    w = winding_number(generator)
    if abs(w) != 1:
        raise NotGenerator(f"generator must wind exactly once, got winding {w}")
    return consts.e_abs / TWO_PI * line_integral(conn, generator, consts.e_abs) / w


def holonomy(conn: FlatConnection, loop: PolyPath, consts: PhysicalConstants) -> complex:
    """The unit complex number exp(integral of A along the loop)."""
    if not loop.closed:
        raise NotClosed("holonomy requires a closed loop")
    return cmath.exp(1j * line_integral(conn, loop, consts.e_abs))


@dataclass(frozen=True)
class EquivalenceWitness:
    """Result of a gauge-equivalence test; truthy iff equivalent.

    `n` is the winding of the gauge map connecting the two connections when
    they are equivalent; `residual` is the distance of the period difference
    from the nearest multiple of |e| either way.
    """

    equivalent: bool
    n: int | None
    residual: float
    tol: float

    def __bool__(self) -> bool:
        return self.equivalent


def gauge_equivalent(
    a: FlatConnection,
    b: FlatConnection,
    generator: PolyPath,
    consts: PhysicalConstants,
    tol: float | None = None,
) -> EquivalenceWitness:
    """Decide gauge equivalence from periods on a single generator.

    One period suffices because the degree-one de Rham space of the
    punctured plane is one-dimensional: the classes agree iff the period
    difference is an integer multiple of |e|.
    """
    tol = EQUIV_TOL if tol is None else float(tol)
    d = period(a, generator, consts) - period(b, generator, consts)
    n = round(d / consts.e_abs)
    residual = float(d - n * consts.e_abs)
    equivalent = abs(residual) < tol
    return EquivalenceWitness(equivalent, int(n) if equivalent else None, residual, tol)


def _simplest_in_interval(lo: Fraction, hi: Fraction) -> Fraction:
    """Smallest-denominator fraction in [lo, hi], by continued-fraction descent."""
    if lo > hi:
        lo, hi = hi, lo
    c = math.ceil(lo)
    if c <= hi:
        return Fraction(c)
    n = math.floor(lo)
    # No integer inside: both endpoints share integer part n and are
    # non-integral, so recurse on the reciprocal of the fractional parts.
    return n + 1 / _simplest_in_interval(1 / (hi - n), 1 / (lo - n))


def classify_holonomy(
    rho: FluxRatio,
    q_max: int | None = None,
    rational_tol: float | None = None,
) -> Classification:
    """Name the holonomy group generated by e^{2*pi*i*rho}.

    Exact rationals p/q give Z_q (Trivial when p = 0); declared irrationals
    give the infinite cyclic group.  A bare float is searched for the
    smallest-denominator rational within `rational_tol` (exact continued
    fraction arithmetic on the binary value); if none has denominator at
    most `q_max` the result is InfiniteCyclic, flagged as uncertified in
    the diagnostics, because no float can witness irrationality.
    """
    q_max = Q_MAX if q_max is None else int(q_max)
    rational_tol = RATIONAL_TOL if rational_tol is None else float(rational_tol)
    if q_max < 1:
        raise ValueError(f"q_max must be >= 1, got {q_max}")

    if isinstance(rho, ExactRational):
        diag = {"kind": "exact_rational", "rho": f"{rho.p}/{rho.q}"}
        if rho.p == 0:
            return Classification(Trivial(), diag)
        return Classification(Cyclic(rho.q), diag)

    if isinstance(rho, DeclaredIrrational):
        diag = {
            "kind": "declared_irrational",
            "description": rho.description,
            "value": rho.value,
        }
        return Classification(InfiniteCyclic(), diag)

    if isinstance(rho, FloatRatio):
        x = Fraction(rho.value) % 1
        tol = Fraction(rational_tol)
        best = _simplest_in_interval(max(Fraction(0), x - tol), x + tol)
        diag = {
            "kind": "float",
            "value": rho.value,
            "q_max": q_max,
            "rational_tol": rational_tol,
        }
        if best.denominator <= q_max:
            best %= 1
            diag["approximation"] = f"{best.numerator}/{best.denominator}"
            diag["error"] = float(abs(x - best))
            if best == 0:
                return Classification(Trivial(), diag)
            return Classification(Cyclic(best.denominator), diag)
        diag["note"] = f"no rational with denominator <= {q_max} within {rational_tol}"
        diag["uncertified"] = True
        return Classification(InfiniteCyclic(), diag)

    raise TypeError(f"not a flux ratio: {rho!r}")


def holonomy_spectrum(rho: FluxRatio, n_max: int) -> list[tuple[int, complex]]:
    """Loop holonomies e^{2*pi*i*rho*n} for windings n in [-n_max, n_max].

    For an exact rational p/q the phase is computed with integer arithmetic
    mod q, so the set of values has exactly q members once n_max >= q.
    """
    n_max = int(n_max)
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    out = []
    for n in range(-n_max, n_max + 1):
        if isinstance(rho, ExactRational):
            frac = ((rho.p * n) % rho.q) / rho.q
        elif isinstance(rho, (DeclaredIrrational, FloatRatio)):
            frac = (rho.value * n) % 1.0
        else:
            raise TypeError(f"not a flux ratio: {rho!r}")
        out.append((n, cmath.exp(2j * math.pi * frac)))
    return out
