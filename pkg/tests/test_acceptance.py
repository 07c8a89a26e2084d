"""Acceptance suite: one test per numbered criterion, at stated tolerances.

Each test prints a `criterion N: PASS` line (visible with `pytest -s` or
`-rP`); a failed assertion means the corresponding criterion is red.
Criteria with runtime budgets measure wall-clock time directly; the final
test checks the budget for this whole module.
"""

from __future__ import annotations

import cmath
import math
import time

import numpy as np
import pytest

from abflat import (
    Cyclic,
    DeclaredIrrational,
    ExpBeta,
    FlatConnection,
    FloatRatio,
    InfiniteCyclic,
    Product,
    Trivial,
    canonical_field,
    classify_holonomy,
    concatenate,
    construct_fn,
    exact_rational,
    exp_sharp,
    gauge_apply,
    gauge_equivalent,
    holonomy,
    holonomy_spectrum,
    line_integral,
    line_integral_sampled,
    make_constants,
    period,
    polynomial_field,
    regular_polygon,
    winding_number,
)
from abflat.geometry import TWO_PI, path_angle_sum

from conftest import near_origin_polygon, random_polynomial_coeffs, star_polygon, unit_square

_MODULE_T0 = {}


@pytest.fixture(scope="module", autouse=True)
def _start_clock():
    _MODULE_T0["t0"] = time.perf_counter()
    yield


def test_criterion_01_constants_reproduction():
    make_constants(1 / 137.04)  # warm any lazy machinery
    best = math.inf
    for _ in range(5):
        t0 = time.perf_counter()
        consts = make_constants(1 / 137.04)
        best = min(best, time.perf_counter() - t0)
    assert abs(consts.e_abs - 0.3028) <= 1e-4
    assert best < 1e-3
    print(f"criterion 1: PASS (e_abs={consts.e_abs:.6f}, {best * 1e6:.1f} us)")


def test_criterion_02_canonical_period():
    t0 = time.perf_counter()
    consts = make_constants(1 / 137.04)
    circle = regular_polygon(360)
    expected = TWO_PI / consts.e_abs
    exact = line_integral(FlatConnection(1.0), circle, consts.e_abs)
    assert abs(exact - expected) / abs(expected) < 1e-10
    sampled = line_integral_sampled(canonical_field(consts.e_abs), circle)
    assert abs(sampled - exact) / abs(exact) < 1e-8
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    print(
        f"criterion 2: PASS (period={exact:.10f}, quadrature within "
        f"{abs(sampled - exact) / abs(exact):.2e}, {elapsed * 1e3:.0f} ms)"
    )


def test_criterion_03_gauge_shift():
    consts = make_constants(1 / 137.04)
    gen = unit_square()
    rng = np.random.default_rng(2026)
    worst = 0.0
    for lam in rng.uniform(-3.0, 3.0, size=20):
        for n in range(-3, 4):
            shifted = gauge_apply(FlatConnection(lam), construct_fn(n), consts.e_abs)
            got = period(shifted, gen, consts)
            worst = max(worst, abs(got - (lam + n * consts.e_abs)))
    assert worst < 1e-9
    print(f"criterion 3: PASS (worst period error {worst:.2e} over 140 cases)")


def test_criterion_04_moduli_circle():
    consts = make_constants(1 / 137.04)
    e = consts.e_abs
    gen = unit_square()
    rng = np.random.default_rng(2027)
    deltas = np.linspace(-2 * e, 2 * e, 200)
    checked = equivalent_count = 0
    for lam in rng.uniform(-2.0, 2.0, size=10):
        a = FlatConnection(lam)
        for delta in deltas:
            should_match = abs(delta - e * round(delta / e)) < 1e-9
            witness = gauge_equivalent(a, FlatConnection(lam + delta), gen, consts)
            assert bool(witness) == should_match, (lam, delta)
            checked += 1
            equivalent_count += bool(witness)
    assert equivalent_count == 2 * 10  # only the grid endpoints sit on the lattice
    print(f"criterion 4: PASS ({checked} pairs, {equivalent_count} on the lattice)")


def test_criterion_05_holonomy_group_classification():
    t0 = time.perf_counter()
    fractions = [
        (p, q) for q in range(1, 65) for p in range(q) if math.gcd(p, q) == 1
    ]
    for p, q in fractions:
        rho = exact_rational(p, q)
        group = classify_holonomy(rho).group
        # independent oracle: smallest n >= 1 with e^{2 pi i p n / q} = 1
        n = 1
        while abs(cmath.exp(2j * math.pi * p * n / q) - 1.0) >= 1e-9:
            n += 1
        assert group == (Trivial() if n == 1 else Cyclic(n))

        values = np.asarray(
            sorted({z for _, z in holonomy_spectrum(rho, q)}, key=lambda z: (z.real, z.imag))
        )
        assert len(values) == q
        if q > 1:
            dist = np.abs(values[:, None] - values[None, :])
            assert dist[~np.eye(q, dtype=bool)].min() > 1e-6
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0
    print(
        f"criterion 5: PASS ({len(fractions)} reduced fractions with q <= 64, "
        f"{elapsed:.2f} s)"
    )


def test_criterion_06_irrational_spectrum():
    rho = DeclaredIrrational("inv_sqrt2", 1 / math.sqrt(2.0))
    assert classify_holonomy(rho).group == InfiniteCyclic()
    spectrum = holonomy_spectrum(rho, 500)
    values = np.asarray([z for _, z in spectrum])
    assert len(values) == 1001
    dist = np.abs(values[:, None] - values[None, :])
    min_dist = dist[~np.eye(len(values), dtype=bool)].min()
    assert min_dist > 1e-6

    result = classify_holonomy(FloatRatio(0.7071067811), q_max=10**3, rational_tol=1e-12)
    assert result.group == InfiniteCyclic()
    assert "no rational" in result.diagnostics["note"]
    print(
        f"criterion 6: PASS (1001 spectrum values, min pairwise distance "
        f"{min_dist:.2e}; float classification found no rational)"
    )


def _random_gauge_map(rng) -> Product | ExpBeta:
    kind = rng.integers(0, 3)
    if kind == 0:
        return construct_fn(int(rng.integers(-3, 4)))
    if kind == 1:
        return exp_sharp(polynomial_field(random_polynomial_coeffs(rng)))
    return Product(
        construct_fn(int(rng.integers(-3, 4))),
        exp_sharp(polynomial_field(random_polynomial_coeffs(rng))),
    )


def test_criterion_07_holonomy_gauge_invariance():
    consts = make_constants(1 / 137.04)
    rng = np.random.default_rng(2028)
    worst = 0.0
    for _ in range(100):
        conn = FlatConnection(
            float(rng.uniform(-2, 2)),
            polynomial_field(random_polynomial_coeffs(rng)),
        )
        f = _random_gauge_map(rng)
        w = int(rng.integers(-3, 4))
        loop = star_polygon(rng, winding=w)
        before = holonomy(conn, loop, consts)
        after = holonomy(gauge_apply(conn, f, consts.e_abs), loop, consts)
        worst = max(worst, abs(before - after))
    assert worst < 1e-9
    print(f"criterion 7: PASS (worst holonomy drift {worst:.2e} over 100 triples)")


def test_criterion_08_winding_exactness():
    rng = np.random.default_rng(2029)
    loops = []
    for _ in range(440):
        w = int(rng.integers(-3, 4)) or 1
        loops.append((w, star_polygon(rng, winding=w, r_min=0.2, r_max=10.0)))
    for _ in range(60):
        sides = int(rng.integers(6, 17))
        loops.append((1, near_origin_polygon(sides, clearance=2e-9)))
    assert len(loops) == 500

    worst_snap = 0.0
    for w_expected, loop in loops:
        total = path_angle_sum(loop)
        w = winding_number(loop)
        assert w == w_expected
        snap = abs(total - TWO_PI * w)
        worst_snap = max(worst_snap, snap)
        assert snap <= 1e-6
        assert winding_number(loop.reversed()) == -w

    pair_count = 0
    for (w1, a), (w2, b) in zip(loops[0:200:2], loops[1:200:2]):
        # rebase the second loop so the endpoints match bitwise
        shift_x, shift_y = a.xs[0] - b.xs[0], a.ys[0] - b.ys[0]
        verts = list(zip((b.xs + shift_x).tolist(), (b.ys + shift_y).tolist()))
        verts[0] = verts[-1] = (float(a.xs[0]), float(a.ys[0]))
        try:
            from abflat import validate_path

            b_moved = validate_path(verts, closed=True)
        except Exception:
            continue
        assert winding_number(concatenate(a, b_moved)) == w1 + winding_number(b_moved)
        pair_count += 1
    assert pair_count >= 50
    print(
        f"criterion 8: PASS (500 loops, worst 2*pi snap {worst_snap:.2e} rad, "
        f"{pair_count} concatenations)"
    )


def test_criterion_09_compactification_length_formula():
    e_literal = 0.302818
    consts = make_constants(e_literal**2 / (4 * math.pi), planck_length=1.0)
    assert abs(consts.e_abs - e_literal) / e_literal < 1e-12
    expected = TWO_PI / e_literal
    assert abs(consts.kk_length - expected) / expected < 1e-9
    print(f"criterion 9: PASS (kk_length={consts.kk_length:.9f} = 2*pi/{e_literal})")


def test_criterion_10_runtime_budget():
    elapsed = time.perf_counter() - _MODULE_T0["t0"]
    assert elapsed < 60.0
    print(f"criterion 10: PASS (acceptance suite took {elapsed:.2f} s of the 60 s budget)")
