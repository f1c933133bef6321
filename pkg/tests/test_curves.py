"""Offset geometry: exact clearance, normal incidence, sampling, heights."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_nearest_distance, cut_distance
from riskcurves import (
    AmbiguousAbscissaError,
    BaseCurve,
    DegenerateRangeError,
    DomainError,
    OutOfRangeError,
    SingularNormalError,
    ValidationError,
    curve_height_at,
    normal_line_at,
    offset_point,
    offset_point_general,
    sample_curve,
)

H9 = BaseCurve.hyperbola(9)

xs_strategy = st.floats(0.5, 10.0)
cs_strategy = st.sampled_from([1.0, 9.0, 20.0])
hs_strategy = st.floats(-5.0, 5.0)


def base_distance(c: float, x: float, X: float, Y: float) -> float:
    return math.hypot(X - x, Y - c / x)


class TestBaseCurve:
    def test_hyperbola_requires_positive_constant(self):
        with pytest.raises(ValidationError):
            BaseCurve.hyperbola(0.0)
        with pytest.raises(ValidationError):
            BaseCurve.hyperbola(-3.0)

    def test_general_rejects_vanishing_derivative(self):
        with pytest.raises(ValidationError):
            BaseCurve.general(lambda x: 5.0, lambda x: 0.0, (1.0, 2.0))

    def test_general_rejects_bad_domain(self):
        with pytest.raises(ValidationError):
            BaseCurve.general(lambda x: x, lambda x: 1.0, (2.0, 1.0))


class TestOffsetPoint:
    def test_zero_offset_is_identity(self):
        p = offset_point(H9, 2.0, 0.0)
        assert (p.X, p.Y) == (2.0, 4.5)

    def test_known_offset_near_x2(self):
        p = offset_point(H9, 1.089, 0.919)
        assert p.X == pytest.approx(2.000124085046318, abs=1e-12)
        assert p.Y == pytest.approx(8.384520719479825, abs=1e-12)
        assert base_distance(9.0, 1.089, p.X, p.Y) == pytest.approx(0.919, rel=1e-12)

    def test_offset_from_first_section_point(self):
        x = 9.0 / math.sqrt(7.0)
        p = offset_point(H9, x, 0.919)
        assert base_distance(9.0, x, p.X, p.Y) == pytest.approx(0.919, rel=1e-12)

    def test_negative_offset_moves_toward_origin(self):
        p = offset_point(H9, 2.0, -1.0)
        assert p.X < 2.0 and p.Y < 4.5
        assert base_distance(9.0, 2.0, p.X, p.Y) == pytest.approx(1.0, rel=1e-12)

    def test_rejects_nonpositive_abscissa(self):
        for bad in (0.0, -1.0):
            with pytest.raises(DomainError):
                offset_point(H9, bad, 1.0)

    def test_rejects_general_curve(self):
        gen = BaseCurve.general(lambda x: 9.0 / x, lambda x: -9.0 / x**2, (0.5, 12.0))
        with pytest.raises(DomainError):
            offset_point(gen, 2.0, 1.0)

    @given(x=xs_strategy, c=cs_strategy, h=hs_strategy)
    def test_offset_exactness(self, x, c, h):
        p = offset_point(BaseCurve.hyperbola(c), x, h)
        assert math.isclose(
            base_distance(c, x, p.X, p.Y), abs(h), rel_tol=1e-12, abs_tol=1e-13
        )

    @given(x=xs_strategy, c=cs_strategy, h=hs_strategy)
    def test_offset_lies_on_normal(self, x, c, h):
        p = offset_point(BaseCurve.hyperbola(c), x, h)
        slope, intercept = normal_line_at(BaseCurve.hyperbola(c), x)
        assert abs(slope * p.X + intercept - p.Y) <= 1e-10

    @given(x=xs_strategy, h1=hs_strategy, h2=hs_strategy)
    def test_nested_offsets_share_the_normal_ray(self, x, h1, h2):
        p1 = offset_point(H9, x, h1)
        p2 = offset_point(H9, x, h2)
        base = (x, 9.0 / x)
        cross = (p1.X - base[0]) * (p2.Y - base[1]) - (p1.Y - base[1]) * (p2.X - base[0])
        assert abs(cross) <= 1e-10
        assert math.isclose(
            math.hypot(p1.X - p2.X, p1.Y - p2.Y), abs(h1 - h2), rel_tol=1e-12, abs_tol=1e-13
        )


class TestOffsetPointGeneral:
    def test_reduces_to_hyperbola_form(self):
        gen = BaseCurve.general(lambda x: 9.0 / x, lambda x: -9.0 / x**2, (0.5, 12.0))
        for x in (0.7, 1.5, 3.0, 6.0, 9.5):
            for h in (-2.0, -0.5, 0.0, 0.919, 3.0):
                pg = offset_point_general(gen, x, h)
                ph = offset_point(H9, x, h)
                assert pg.X == pytest.approx(ph.X, abs=1e-12)
                assert pg.Y == pytest.approx(ph.Y, abs=1e-12)

    def test_zero_offset_returns_curve_point(self):
        gen = BaseCurve.general(lambda x: 10.0 - x, lambda x: -1.0, (1.0, 9.0))
        p = offset_point_general(gen, 4.0, 0.0)
        assert (p.X, p.Y) == (4.0, 6.0)

    def test_line_offset_along_unit_normal(self):
        gen = BaseCurve.general(lambda x: 10.0 - x, lambda x: -1.0, (1.0, 9.0))
        p = offset_point_general(gen, 4.0, math.sqrt(2.0))
        assert p.X == pytest.approx(5.0, abs=1e-12)
        assert p.Y == pytest.approx(7.0, abs=1e-12)

    def test_rejects_out_of_domain(self):
        gen = BaseCurve.general(lambda x: 10.0 - x, lambda x: -1.0, (1.0, 9.0))
        with pytest.raises(DomainError):
            offset_point_general(gen, 0.5, 1.0)

    def test_singular_normal_at_flat_point(self):
        gen = BaseCurve.general(lambda x: x * x + 1.0, lambda x: 2.0 * x, (-1.0, 1.0000001))
        with pytest.raises(SingularNormalError):
            offset_point_general(gen, 0.0, 1.0)

    def test_rejects_hyperbola_curve(self):
        with pytest.raises(DomainError):
            offset_point_general(H9, 2.0, 1.0)


class TestNormalLine:
    def test_line_at_first_section_point(self):
        slope, intercept = normal_line_at(H9, 9.0 / math.sqrt(7.0))
        assert slope == pytest.approx(9.0 / 7.0, abs=1e-12)
        assert intercept == pytest.approx(-32.0 * math.sqrt(7.0) / 49.0, abs=1e-12)
        # agrees with the rounded print 1.286x - y - 1.729 = 0 to 1e-3 there
        assert abs(1.286 * (9.0 / math.sqrt(7.0)) - math.sqrt(7.0) - 1.729) < 1e-3

    def test_symmetry_point_has_unit_slope(self):
        slope, intercept = normal_line_at(H9, 3.0)
        assert slope == pytest.approx(1.0, abs=1e-12)
        assert slope * 3.0 + intercept == pytest.approx(3.0, abs=1e-12)

    def test_left_edge(self):
        slope, intercept = normal_line_at(H9, 1.0)
        assert slope == pytest.approx(1.0 / 9.0, abs=1e-12)
        assert intercept == pytest.approx(9.0 - 1.0 / 9.0, abs=1e-12)

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            normal_line_at(H9, 0.0)


class TestSampleCurve:
    def test_base_hyperbola_integer_points(self):
        poly = sample_curve(H9, 0.0, 1.0, 9.0, 9)
        assert len(poly.points) == 9
        for k, (X, Y) in enumerate(poly.points, start=1):
            assert X == pytest.approx(float(k), abs=1e-12)
            assert Y == pytest.approx(9.0 / k, abs=1e-12)
        assert poly.dropped == ()

    def test_narrow_offset_keeps_every_vertex_at_clearance(self):
        poly = sample_curve(H9, 0.919, 0.8, 9.0, 200)
        assert poly.dropped == ()
        xs = [p[0] for p in poly.points]
        assert all(b > a for a, b in zip(xs, xs[1:]))
        for X, Y in poly.points[::20]:
            assert brute_nearest_distance(9.0, X, Y) == pytest.approx(0.919, abs=1e-6)

    def test_wide_offset_filters_foldback(self):
        # 4.595 exceeds the minimum curvature radius (sqrt(18) ~ 4.2426), so
        # the raw offset folds back; the filter must drop that stretch.
        poly = sample_curve(H9, 4.595, 0.8, 9.0, 120)
        assert poly.dropped != ()
        xs = [p[0] for p in poly.points]
        assert all(b > a for a, b in zip(xs, xs[1:]))
        params = [t for t in _params(0.8, 9.0, 120) if t not in poly.dropped]
        assert len(params) == len(poly.points)
        for t, (X, Y) in zip(params, poly.points):
            d = brute_nearest_distance(9.0, X, Y)
            assert d <= 4.595 + 1e-9
            if 4.595 <= cut_distance(9.0, t):
                # before the symmetry-diagonal crossing the clearance is exact
                assert d == pytest.approx(4.595, abs=1e-6)
            else:
                # past it the mirror branch is closer; measured dip < 0.021
                assert d >= 4.595 - 0.021

    def test_all_points_collapse_raises(self):
        with pytest.raises(DegenerateRangeError):
            sample_curve(H9, 100.0, 2.5, 3.5, 10)

    def test_invalid_ranges(self):
        with pytest.raises(DomainError):
            sample_curve(H9, 0.0, -1.0, 5.0, 10)
        with pytest.raises(DomainError):
            sample_curve(H9, 0.0, 5.0, 1.0, 10)
        with pytest.raises(DomainError):
            sample_curve(H9, 0.0, 1.0, 5.0, 1)

    def test_general_curve_sampling(self):
        gen = BaseCurve.general(lambda x: 10.0 - x, lambda x: -1.0, (1.0, 9.0))
        poly = sample_curve(gen, math.sqrt(2.0), 2.0, 6.0, 5)
        for X, Y in poly.points:
            # offset of y = 10 - x by sqrt(2) is the parallel line y = 12 - x
            assert Y == pytest.approx(12.0 - X, abs=1e-12)


def _params(lo: float, hi: float, n: int) -> list[float]:
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


class TestCurveHeightAt:
    def test_base_curve_height(self):
        assert curve_height_at(H9, 0.0, 3.0) == pytest.approx(3.0, abs=1e-10)

    @given(X=st.floats(0.5, 20.0), c=cs_strategy)
    @settings(max_examples=40)
    def test_zero_offset_height_is_reciprocal(self, X, c):
        assert curve_height_at(BaseCurve.hyperbola(c), 0.0, X) == pytest.approx(
            c / X, abs=1e-10
        )

    def test_height_of_first_offset_curve(self):
        assert curve_height_at(H9, 0.919, 2.0) == pytest.approx(8.385463, abs=1e-5)

    def test_height_of_second_offset_curve(self):
        # establishes that (3, 7) sits below this curve
        y = curve_height_at(H9, 1.838, 3.0)
        assert y == pytest.approx(7.884880, abs=1e-5)
        assert 7.0 < y

    def test_unreachable_abscissa(self):
        # X(x) = x + 9h/sqrt(81 + x**4) never drops to 0.5 for h = 0.919
        with pytest.raises(OutOfRangeError):
            curve_height_at(H9, 0.919, 0.5)

    def test_folded_offset_is_ambiguous(self):
        h6 = 5 * 0.9193717314619064
        with pytest.raises(AmbiguousAbscissaError) as err:
            curve_height_at(H9, h6, 6.25)
        assert len(err.value.candidates) == 3

    def test_height_matches_offset_round_trip(self):
        p = offset_point(H9, 1.7, 2.3)
        assert curve_height_at(H9, 2.3, p.X) == pytest.approx(p.Y, abs=1e-9)
