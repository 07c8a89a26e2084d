from __future__ import annotations

import math

import numpy as np
import pytest

from abflat import PolyPath, make_constants, validate_path

TWO_PI = 2.0 * math.pi


@pytest.fixture(scope="session")
def consts():
    return make_constants(1 / 137.04)


def unit_square() -> PolyPath:
    return validate_path([(1, 1), (-1, 1), (-1, -1), (1, -1), (1, 1)], closed=True)


def star_polygon(
    rng: np.random.Generator,
    winding: int = 1,
    n_per_turn: int = 9,
    r_min: float = 0.3,
    r_max: float = 3.0,
    start_radius: float | None = None,
) -> PolyPath:
    """Random star-shaped loop with a prescribed winding about the origin.

    Monotone angles with jittered steps keep every step well below pi, which
    guarantees each segment stays clear of the origin.  winding=0 produces a
    loop far from the origin instead.
    """
    if winding == 0:
        cx, cy = 6.0 + rng.uniform(0, 2), 6.0 + rng.uniform(0, 2)
        m = max(n_per_turn, 4)
        radius = rng.uniform(0.5, 2.0)
        theta = TWO_PI * np.arange(m) / m
        verts = [(cx + radius * math.cos(t), cy + radius * math.sin(t)) for t in theta]
        verts.append(verts[0])
        return validate_path(verts, closed=True)

    sign = 1 if winding > 0 else -1
    turns = abs(winding)
    m = n_per_turn * turns
    steps = rng.uniform(0.5, 1.0, size=m)
    steps = steps / steps.sum() * (TWO_PI * turns)
    angles = sign * np.concatenate([[0.0], np.cumsum(steps)])
    radii = rng.uniform(r_min, r_max, size=m + 1)
    if start_radius is not None:
        radii[0] = start_radius
    xs = radii * np.cos(angles)
    ys = radii * np.sin(angles)
    verts = list(zip(xs.tolist(), ys.tolist()))
    verts[-1] = verts[0]
    return validate_path(verts, closed=True)


def near_origin_polygon(sides: int, clearance: float = 2e-9) -> PolyPath:
    """Regular polygon whose segments pass exactly `clearance` from the origin."""
    r = clearance / math.cos(math.pi / sides)
    theta = TWO_PI * np.arange(sides) / sides
    verts = [(r * math.cos(t), r * math.sin(t)) for t in theta]
    verts.append(verts[0])
    return validate_path(verts, closed=True)


def random_polynomial_coeffs(rng: np.random.Generator, scale: float = 0.5):
    """A few low-degree terms (i, j, c) for a polynomial scalar field."""
    terms = []
    for i in range(3):
        for j in range(3 - i):
            if rng.uniform() < 0.5:
                terms.append((i, j, float(rng.uniform(-scale, scale))))
    if not terms:
        terms.append((1, 0, float(rng.uniform(-scale, scale))))
    return terms
