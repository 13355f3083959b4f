"""Measure, normalization, and count-optimization tests."""

import math

import pytest

from circleproxy import (
    Circle,
    ConfigError,
    CostBreakdown,
    CountRange,
    Measures,
    Point2,
    Weights,
    band_normalize,
    choose_count,
    measure_adjacency,
    measure_asymmetry,
    measure_exterior,
    measure_overlap,
    optimize_sample_count,
    shape_from_loops,
    total_cost,
)
from circleproxy.cost_model import adjacency_count

# Lens area of two unit circles one apart, counted from both sides,
# over the total ball area 2*pi.
OVERLAP_UNIT_D1 = (2 * math.pi / 3 - math.sqrt(3) / 2) / math.pi


def C(x, y, r):
    return Circle(Point2(x, y), r)


def row(n, m_o=0.0, m_e=0.0, m_a=0.0, m_y=0.0, total=0.0):
    m = Measures(m_o, m_e, m_a, m_y)
    return CostBreakdown(n=n, raw=m, band_normalized=m, total=total, adjacency_count=0)


class TestMeasureOverlap:
    def test_disjoint(self):
        assert measure_overlap([C(0, 0, 1), C(5, 0, 1)]) == 0.0

    def test_identical_balls_saturate(self):
        assert measure_overlap([C(0, 0, 1), C(0, 0, 1)]) == 1.0

    def test_unit_balls_distance_one(self):
        got = measure_overlap([C(0, 0, 1), C(1, 0, 1)])
        assert got == pytest.approx(OVERLAP_UNIT_D1, abs=1e-12)
        assert got == pytest.approx(0.39100, abs=1e-4)

    def test_zero_radii(self):
        assert measure_overlap([C(0, 0, 0), C(1, 0, 0)]) == 0.0

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            measure_overlap([])


class TestMeasureExterior:
    def test_ball_inside(self, corpus):
        shape = corpus["annulus"]
        assert measure_exterior([C(0.7, 0.7, 0.5)], shape) == pytest.approx(0.0, abs=1e-9)

    def test_ball_outside(self, unit_square):
        assert measure_exterior([C(10, 10, 1)], unit_square) == pytest.approx(1.0)

    def test_half_on_edge(self):
        shape = shape_from_loops([([(-5, 0), (5, 0), (5, 5), (-5, 5)], False)])
        assert measure_exterior([C(0, 0, 1)], shape) == pytest.approx(0.5, abs=1e-6)


class TestMeasureAdjacency:
    def test_chain_of_four(self):
        balls = [C(0, 0, 1), C(2, 0, 1), C(4, 0, 1), C(6, 0, 1)]
        m_a, a = measure_adjacency(balls, 4, eps=0.02)
        assert a == 6
        assert m_a == 0.0

    def test_three_mutually_touching(self):
        balls = [C(0, 0, 1), C(2, 0, 1), C(1, math.sqrt(3), 1)]
        m_a, a = measure_adjacency(balls, 3, eps=0.02)
        assert a == 6
        assert m_a == pytest.approx(1 / 3)

    def test_three_far_apart(self):
        balls = [C(0, 0, 1), C(10, 0, 1), C(0, 10, 1)]
        m_a, a = measure_adjacency(balls, 3, eps=0.02)
        assert a == 0
        assert m_a == pytest.approx(2 / 3)

    def test_count_even_and_bounded(self):
        balls = [C(0, 0, 1), C(1, 0, 1), C(0.5, 0.5, 1), C(9, 9, 0.1)]
        a = adjacency_count(balls, 0.02)
        assert a % 2 == 0
        assert a <= len(balls) * (len(balls) - 1)

    def test_single_ball_rejected(self):
        with pytest.raises(ValueError):
            measure_adjacency([C(0, 0, 1)], 1)


class TestMeasureAsymmetry:
    def test_ball_fully_inside(self, corpus):
        assert measure_asymmetry([C(2, 0.5, 0.4)], corpus["rect4x1"]) == 0.0

    def test_half_plane_edge_is_one(self):
        shape = shape_from_loops([([(-5, -5), (0, -5), (0, 5), (-5, 5)], False)])
        assert measure_asymmetry([C(0, 0, 1)], shape) == pytest.approx(1.0)

    def test_ball_fully_outside(self, unit_square):
        assert measure_asymmetry([C(20, 20, 1)], unit_square) == 0.0

    def test_in_unit_range_on_boundary_straddlers(self, corpus):
        shape = corpus["lshape"]
        balls = [C(0.0, 0.0, 0.8), C(3.0, 1.0, 0.7), C(1.0, 3.0, 1.2)]
        v = measure_asymmetry(balls, shape)
        assert 0.0 <= v <= 1.0

    def test_grid_validation(self, unit_square):
        with pytest.raises(ValueError):
            measure_asymmetry([C(0, 0, 1)], unit_square, grid=4)


class TestBandNormalize:
    def test_example_series(self):
        series = [row(1, m_e=0.2), row(2, m_e=0.4), row(3, m_e=0.6)]
        out = band_normalize(series, Weights())
        assert [r.band_normalized.exterior for r in out] == pytest.approx([0.5, 1.0, 1.5])

    def test_constant_series(self):
        series = [row(n, m_o=0.3) for n in (1, 2, 3)]
        out = band_normalize(series, Weights())
        assert [r.band_normalized.overlap for r in out] == pytest.approx([1.0, 1.0, 1.0])

    def test_zero_series_stays_zero(self):
        series = [row(n) for n in (1, 2, 3)]
        out = band_normalize(series, Weights())
        assert all(r.band_normalized == Measures(0, 0, 0, 0) for r in out)
        assert all(r.total == 0.0 for r in out)

    def test_normalized_mean_is_one(self):
        series = [row(n, m_o=0.1 * n, m_e=0.05 * n, m_a=0.2, m_y=0.01) for n in range(1, 7)]
        out = band_normalize(series, Weights())
        for field in range(4):
            vals = [r.band_normalized[field] for r in out]
            assert sum(vals) / len(vals) == pytest.approx(1.0, abs=1e-12)


class TestTotalCost:
    def test_all_zero(self):
        assert total_cost(row(5), Weights()) == 0.0

    def test_n2_drops_adjacency(self):
        b = row(2, m_a=0.9)
        assert total_cost(b, Weights(1, 1, 1, 1)) == 0.0

    def test_unit_weights_sum(self):
        b = row(5, m_o=0.1, m_e=0.2, m_a=0.3, m_y=0.4)
        assert total_cost(b, Weights(1, 1, 1, 1)) == pytest.approx(1.0)

    def test_choose_count_tie_breaks_small(self):
        series = [
            row(4, total=1.5),
            row(2, total=1.0),
            row(3, total=1.0),
            row(5, total=2.0),
        ]
        assert choose_count(series) == 2


class TestCountRange:
    def test_auto_n_max(self, corpus):
        # rect4x1 area 4; r_min 0.5 -> floor(4 / (pi/4)) = 5
        cr = CountRange.auto(corpus["rect4x1"], r_min=0.5)
        assert cr.n_max == 5

    def test_auto_r_min_fraction(self, unit_square):
        cr = CountRange.auto(unit_square)
        assert cr.r_min == pytest.approx(0.04 * math.sqrt(2))

    def test_invalid_range_reports_both(self):
        with pytest.raises(ConfigError) as err:
            CountRange(5, 3, 1.0)
        assert "5" in str(err.value) and "3" in str(err.value)

    def test_auto_conflict_raises(self, unit_square):
        with pytest.raises(ConfigError):
            CountRange.auto(unit_square, n_min=10, r_min=0.5)


class TestOptimizeSampleCount:
    def test_small_shape_special_case(self, corpus):
        disk = corpus["disk"]
        samples, rows = optimize_sample_count(
            disk, CountRange(1, 5, r_min=1.0), Weights(), boundary_count=128
        )
        assert rows == []
        assert len(samples.balls) == 1
        ball = samples.balls[0]
        assert math.hypot(ball.center.x, ball.center.y) < 0.05
        assert abs(ball.radius - 1.0) < 0.1

    def test_single_count_scan(self, corpus):
        samples, rows = optimize_sample_count(
            corpus["rect4x1"], CountRange(3, 3, 0.2), Weights(),
            boundary_count=100, interior_count=50,
        )
        assert len(samples.balls) == 3
        assert len(rows) == 1
        for v in rows[0].band_normalized:
            assert v in (0.0, 1.0)

    def test_dumbbell_argmin_and_coverage(self, corpus):
        samples, rows = optimize_sample_count(
            corpus["dumbbell"], CountRange(2, 6, 0.3), Weights(),
            boundary_count=200, interior_count=100,
        )
        chosen = len(samples.balls)
        chosen_row = next(r for r in rows if r.n == chosen)
        assert all(chosen_row.total <= r.total for r in rows)
        left = min(
            math.hypot(b.center.x, b.center.y) for b in samples.balls
        )
        right = min(
            math.hypot(b.center.x - 4.0, b.center.y) for b in samples.balls
        )
        assert left <= 1.0 and right <= 1.0

    def test_weight_scaling_keeps_argmin(self, corpus):
        kwargs = dict(boundary_count=120, interior_count=60)
        w = Weights()
        s1, rows1 = optimize_sample_count(
            corpus["lshape"], CountRange(1, 5, 0.3), w, **kwargs
        )
        s7, rows7 = optimize_sample_count(
            corpus["lshape"], CountRange(1, 5, 0.3), w.scaled(7.0), **kwargs
        )
        assert len(s1.balls) == len(s7.balls)
        for a, b in zip(rows1, rows7):
            assert b.total == pytest.approx(7.0 * a.total, rel=1e-12)

    def test_raw_measures_in_unit_range(self, corpus):
        _, rows = optimize_sample_count(
            corpus["ushape"], CountRange(1, 6, 0.3), Weights(),
            boundary_count=120, interior_count=60,
        )
        for r in rows:
            for v in r.raw:
                assert 0.0 <= v <= 1.0

    def test_deterministic(self, corpus):
        args = (corpus["cross"], CountRange(1, 4, 0.3), Weights())
        kwargs = dict(boundary_count=100, interior_count=40)
        a = optimize_sample_count(*args, **kwargs)
        b = optimize_sample_count(*args, **kwargs)
        assert a == b

    def test_area_objective(self, corpus):
        samples, rows = optimize_sample_count(
            corpus["rect4x1"], CountRange(1, 4, 0.3), Weights(),
            boundary_count=100, interior_count=40, objective="area",
        )
        assert samples.parameters["objective"] == "area"
        assert len(samples.balls) >= 1

    def test_unknown_objective(self, corpus):
        with pytest.raises(ConfigError):
            optimize_sample_count(
                corpus["square"], CountRange(1, 2, 0.1), Weights(), objective="bogus"
            )
