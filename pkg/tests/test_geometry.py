from __future__ import annotations

import math

import numpy as np
import pytest

from abflat import (
    DegeneratePath,
    NotClosed,
    PolyPath,
    PuncturedPoint,
    SegmentThroughOrigin,
    VertexAtOrigin,
    WindingNotInteger,
    concatenate,
    regular_polygon,
    segment_angle,
    validate_path,
    winding_number,
)
from abflat.geometry import path_angle_sum

from conftest import near_origin_polygon, star_polygon, unit_square

TWO_PI = 2.0 * math.pi


def _quad_angle_oracle(p, q, n=200_001):
    """Brute-force trapezoid quadrature of (x dy - y dx)/(x^2+y^2) along p->q."""
    t = np.linspace(0.0, 1.0, n)
    x = p[0] + t * (q[0] - p[0])
    y = p[1] + t * (q[1] - p[1])
    dx, dy = q[0] - p[0], q[1] - p[1]
    integrand = (x * dy - y * dx) / (x * x + y * y)
    return float(np.trapezoid(integrand, t))


class TestValidatePath:
    def test_unit_square_is_valid(self):
        sq = unit_square()
        assert sq.closed
        assert sq.segment_count == 4

    def test_diameter_through_origin_rejected(self):
        with pytest.raises(SegmentThroughOrigin):
            validate_path([(1, 0), (-1, 0)], closed=False)

    def test_single_vertex_rejected(self):
        with pytest.raises(DegeneratePath):
            validate_path([(1, 0)], closed=True)

    def test_repeated_single_vertex_rejected(self):
        with pytest.raises(DegeneratePath):
            validate_path([(1, 0), (1, 0)], closed=True)

    def test_zero_length_segment_rejected(self):
        with pytest.raises(DegeneratePath):
            validate_path([(1, 0), (1, 0), (0, 1), (1, 0)], closed=True)

    def test_vertex_at_origin_rejected(self):
        with pytest.raises(VertexAtOrigin):
            validate_path([(1, 0), (0, 0), (0, 1)], closed=False)

    def test_vertex_within_eps_rejected(self):
        with pytest.raises(VertexAtOrigin):
            validate_path([(1, 0), (5e-10, 5e-10), (0, 1)], closed=False)

    def test_open_endpoints_asserted_closed_rejected(self):
        with pytest.raises(NotClosed):
            validate_path([(1, 0), (0, 1), (-1, 0)], closed=True)

    def test_near_closure_is_not_closure(self):
        with pytest.raises(NotClosed):
            validate_path([(1, 0), (0, 1), (1, 1e-15)], closed=True)

    def test_eps_override_widens_exclusion(self):
        verts = [(1, 0.01), (-1, 0.01)]
        validate_path(verts, closed=False)
        with pytest.raises(SegmentThroughOrigin):
            validate_path(verts, closed=False, eps_origin=0.1)

    def test_vertices_are_punctured_points(self):
        sq = unit_square()
        assert all(isinstance(v, PuncturedPoint) for v in sq.vertices)
        assert not sq.xs.flags.writeable

    def test_point_at_origin_rejected(self):
        with pytest.raises(VertexAtOrigin):
            PuncturedPoint(0.0, 0.0)


class TestSegmentAngle:
    def test_quarter_turn(self):
        assert segment_angle((1, 0), (0, 1)) == pytest.approx(math.pi / 2, abs=1e-15)

    def test_identity_case(self):
        assert segment_angle((1, 0), (1, 0)) == 0.0

    def test_horizontal_chord_above_origin(self):
        # arg(-1+i) - arg(1+i) = 3pi/4 - pi/4
        val = segment_angle((1, 1), (-1, 1))
        assert val == pytest.approx(math.pi / 2, abs=1e-15)
        assert val == pytest.approx(_quad_angle_oracle((1, 1), (-1, 1)), abs=1e-9)

    def test_matches_quadrature_on_random_segments(self):
        rng = np.random.default_rng(7)
        for _ in range(10):
            p = rng.uniform(0.5, 2.0) * np.array(
                [math.cos(a := rng.uniform(0, TWO_PI)), math.sin(a)]
            )
            q = rng.uniform(0.5, 2.0) * np.array(
                [math.cos(b := a + rng.uniform(-2.0, 2.0)), math.sin(b)]
            )
            assert segment_angle(p, q) == pytest.approx(
                _quad_angle_oracle(p, q), abs=1e-8
            )

    def test_segment_through_origin_rejected(self):
        with pytest.raises(SegmentThroughOrigin):
            segment_angle((1, 0), (-1, 0))


class TestWindingNumber:
    def test_unit_square_ccw(self):
        assert winding_number(unit_square()) == 1

    def test_unit_square_cw(self):
        assert winding_number(unit_square().reversed()) == -1

    def test_doubled_square_winds_twice(self):
        sq = unit_square()
        assert winding_number(concatenate(sq, sq)) == 2

    def test_far_square_does_not_wind(self):
        far = validate_path(
            [(10, 10), (11, 10), (11, 11), (10, 11), (10, 10)], closed=True
        )
        assert winding_number(far) == 0
        assert winding_number(far.reversed()) == 0

    def test_open_path_rejected(self):
        arc = validate_path([(1, 0), (0, 1)], closed=False)
        with pytest.raises(NotClosed):
            winding_number(arc)

    def test_corrupt_loop_flagged(self):
        # Bypasses validate_path: endpoints differ, so the angle sum cannot
        # land on 2*pi*Z.
        xs = np.array([1.0, 0.0, -1.0])
        ys = np.array([0.0, 1.0, 0.3])
        with pytest.raises(WindingNotInteger):
            winding_number(PolyPath(xs, ys, closed=True))

    def test_angle_sum_near_multiple_of_two_pi(self):
        rng = np.random.default_rng(11)
        for w in (-3, -1, 1, 2, 4):
            loop = star_polygon(rng, winding=w)
            total = path_angle_sum(loop)
            assert abs(total - TWO_PI * w) <= 1e-12 * loop.segment_count

    def test_hundred_random_star_loops_wind_once(self):
        rng = np.random.default_rng(13)
        for _ in range(100):
            assert winding_number(star_polygon(rng, winding=1)) == 1

    def test_reversal_negates(self):
        rng = np.random.default_rng(17)
        for w in (-2, 1, 3):
            loop = star_polygon(rng, winding=w)
            assert winding_number(loop.reversed()) == -winding_number(loop)

    def test_concatenation_adds(self):
        rng = np.random.default_rng(19)
        for w1, w2 in [(1, 1), (2, -1), (-1, -2), (3, 2)]:
            a = star_polygon(rng, winding=w1, start_radius=1.5)
            b = star_polygon(rng, winding=w2, start_radius=1.5)
            assert winding_number(concatenate(a, b)) == w1 + w2

    def test_collinear_vertex_insertion_is_invisible(self):
        rng = np.random.default_rng(23)
        loop = star_polygon(rng, winding=2)
        w = winding_number(loop)
        for k in range(loop.segment_count):
            mid = (
                0.5 * (loop.xs[k] + loop.xs[k + 1]),
                0.5 * (loop.ys[k] + loop.ys[k + 1]),
            )
            verts = list(zip(loop.xs.tolist(), loop.ys.tolist()))
            verts.insert(k + 1, mid)
            assert winding_number(validate_path(verts, closed=True)) == w

    def test_near_origin_polygon_is_valid_and_winds(self):
        loop = near_origin_polygon(12)
        assert winding_number(loop) == 1
        assert winding_number(loop.reversed()) == -1


class TestHelpers:
    def test_regular_polygon_closes_exactly(self):
        hexagon = regular_polygon(6, radius=2.5)
        assert hexagon.closed
        assert winding_number(hexagon) == 1

    def test_concatenate_requires_shared_endpoint(self):
        a = validate_path([(1, 0), (2, 0)], closed=False)
        b = validate_path([(3, 0), (4, 0)], closed=False)
        with pytest.raises(DegeneratePath):
            concatenate(a, b)

    def test_concatenate_open_paths(self):
        a = validate_path([(1, 0), (2, 0)], closed=False)
        b = validate_path([(2, 0), (2, 1)], closed=False)
        joined = concatenate(a, b)
        assert not joined.closed
        assert joined.segment_count == 2
