"""Unit tests for the core metric pipeline."""

import math

import numpy as np
import pytest

from sagini import (
    BadEndpointError,
    EmptyOrSingletonError,
    InvalidNError,
    NonFiniteValueError,
    NonPositiveTotalError,
    UnequalSpacingError,
    build_dataset,
    g_left,
    g_right,
    gap_vector,
    gini,
    lorenz_curve,
    lorenz_from_points,
    make_weights,
    metrics_from_lorenz,
    report,
    sag,
)
from sagini.metrics import GapVector

from fixtures import (
    LEFT_SKEWED_EXPECTED,
    LEFT_SKEWED_Q,
    RIGHT_SKEWED_EXPECTED,
    RIGHT_SKEWED_GAPS,
    RIGHT_SKEWED_Q,
    SYMMETRIC_GAPS,
    SYMMETRIC_Q,
    SYMMETRIC_VALUES,
    points_from_q,
)


def gaps_of(values):
    return gap_vector(lorenz_curve(build_dataset(values)))


class TestBuildDataset:
    def test_ten_point_fixture(self):
        data = build_dataset(SYMMETRIC_VALUES)
        assert data.n == 10
        assert data.total == 100.0
        assert data.mean == 10.0

    def test_input_order_retained(self):
        data = build_dataset([3.0, 1.0, 2.0])
        assert data.values.tolist() == [3.0, 1.0, 2.0]
        assert data.sorted_values.tolist() == [1.0, 2.0, 3.0]

    def test_singleton_rejected(self):
        with pytest.raises(EmptyOrSingletonError):
            build_dataset([5.0])

    def test_empty_rejected(self):
        with pytest.raises(EmptyOrSingletonError):
            build_dataset([])

    def test_non_positive_total_rejected(self):
        with pytest.raises(NonPositiveTotalError):
            build_dataset([-1.0, -2.0, 2.0])

    def test_zero_total_rejected(self):
        with pytest.raises(NonPositiveTotalError):
            build_dataset([-1.0, 1.0])

    def test_nan_rejected_with_index(self):
        with pytest.raises(NonFiniteValueError, match="index 2"):
            build_dataset([1.0, 2.0, float("nan"), 3.0])

    def test_infinity_rejected(self):
        with pytest.raises(NonFiniteValueError):
            build_dataset([1.0, float("inf")])

    def test_values_immutable(self):
        data = build_dataset([1.0, 2.0])
        with pytest.raises(ValueError):
            data.values[0] = 9.0

    def test_zeros_and_negatives_allowed(self):
        data = build_dataset([-2.0, 0.0, 5.0])
        assert data.total == 3.0


class TestLorenzCurve:
    def test_q_matches_fixture(self):
        curve = lorenz_curve(build_dataset(SYMMETRIC_VALUES))
        assert curve.q == pytest.approx(SYMMETRIC_Q, abs=1e-15)
        assert curve.p == pytest.approx([i / 10 for i in range(1, 11)], abs=0)

    def test_endpoints_exact(self):
        curve = lorenz_curve(build_dataset([3.0, 1.0, 7.0, 2.0]))
        assert curve.p[-1] == 1.0
        assert curve.q[-1] == 1.0

    def test_equal_values_sit_on_diagonal(self):
        curve = lorenz_curve(build_dataset([5.0, 5.0, 5.0, 5.0]))
        assert curve.q.tolist() == [0.25, 0.5, 0.75, 1.0]
        assert np.array_equal(curve.p, curve.q)

    def test_negative_values_dip_below_zero(self):
        curve = lorenz_curve(build_dataset([-2.0, 1.0, 5.0]))
        assert curve.q.tolist() == [-0.5, -0.25, 1.0]
        assert curve.convex

    def test_sorted_nonnegative_is_convex(self):
        curve = lorenz_curve(build_dataset([9.0, 1.0, 1.0, 4.0, 2.0]))
        assert curve.convex

    def test_p_strictly_increasing(self):
        curve = lorenz_curve(build_dataset(SYMMETRIC_VALUES))
        assert np.all(np.diff(curve.p) > 0)


class TestGapVector:
    def test_symmetric_fixture_gaps(self):
        gapv = gaps_of(SYMMETRIC_VALUES)
        assert gapv.n == 10
        assert len(gapv.gaps) == 9
        assert gapv.gaps == pytest.approx(SYMMETRIC_GAPS, abs=1e-15)

    def test_palindrome_shape(self):
        gapv = gaps_of(SYMMETRIC_VALUES)
        assert gapv.gaps == pytest.approx(gapv.gaps[::-1], abs=1e-15)

    def test_perfect_equality_gaps_zero(self):
        gapv = gaps_of([1.0] * 6)
        assert gapv.gaps.tolist() == [0.0] * 5

    def test_right_skewed_fixture_gaps(self):
        curve = lorenz_from_points(points_from_q(RIGHT_SKEWED_Q))
        gapv = gap_vector(curve)
        assert gapv.gaps == pytest.approx(RIGHT_SKEWED_GAPS, abs=1e-15)

    def test_boundary_term_is_exactly_zero(self):
        # The i = n distance is dropped because it is identically zero;
        # folding it into the sums would change nothing.
        curve = lorenz_curve(build_dataset(SYMMETRIC_VALUES))
        assert curve.p[-1] - curve.q[-1] == 0.0
        gapv = gap_vector(curve)
        assert len(gapv.gaps) == curve.n - 1
        extended = np.append(gapv.gaps, curve.p[-1] - curve.q[-1])
        assert (2.0 / gapv.n) * math.fsum(extended) == gini(gapv)
        # the would-be weight at i = n is exactly 2, times a zero gap
        assert (2.0 / gapv.n) * math.fsum(
            extended * np.append(make_weights(gapv.n, "right").weights, 2.0)
        ) == g_right(gapv)


class TestWeights:
    def test_right_weights_n10(self):
        w = make_weights(10, "right").weights
        assert w.tolist() == [0.2, 0.4, 0.6, 0.8, 1.0, 1.2, 1.4, 1.6, 1.8]

    def test_left_weights_n10(self):
        w = make_weights(10, "left").weights
        assert w.tolist() == [1.8, 1.6, 1.4, 1.2, 1.0, 0.8, 0.6, 0.4, 0.2]

    def test_left_is_right_reversed_bitwise(self):
        for n in (2, 3, 7, 10, 101, 1000):
            right = make_weights(n, "right").weights
            left = make_weights(n, "left").weights
            assert np.array_equal(left, right[::-1])

    def test_n2_degenerate(self):
        assert make_weights(2, "right").weights.tolist() == [1.0]
        assert make_weights(2, "left").weights.tolist() == [1.0]

    def test_mean_is_one(self):
        for n in (2, 5, 10, 137, 10_000):
            w = make_weights(n, "right").weights
            assert math.fsum(w) / (n - 1) == pytest.approx(1.0, abs=1e-12)

    def test_mirror_sum_exactly_two(self):
        for n in (2, 3, 9, 10, 64, 997, 12345):
            right = make_weights(n, "right").weights
            left = make_weights(n, "left").weights
            assert np.all(right + left == 2.0)

    def test_range_and_monotonicity(self):
        w = make_weights(50, "right").weights
        assert np.all(w > 0) and np.all(w < 2)
        assert np.all(np.diff(w) > 0)
        wl = make_weights(50, "left").weights
        assert np.all(np.diff(wl) < 0)

    def test_invalid_n(self):
        with pytest.raises(InvalidNError):
            make_weights(1, "right")

    def test_bad_direction(self):
        with pytest.raises(ValueError):
            make_weights(5, "up")


class TestIndices:
    def test_symmetric_fixture_all_033(self):
        gapv = gaps_of(SYMMETRIC_VALUES)
        for fn in (gini, g_right, g_left, sag):
            assert fn(gapv) == pytest.approx(0.33, abs=1e-14)

    def test_zero_gaps_give_zero(self):
        gapv = GapVector(gaps=np.zeros(4), n=5)
        assert gini(gapv) == 0.0
        assert g_right(gapv) == 0.0
        assert g_left(gapv) == 0.0
        assert sag(gapv) == 0.0

    def test_two_zeros_one_three(self):
        gapv = gaps_of([0.0, 0.0, 3.0])
        assert gini(gapv) == pytest.approx(2 / 3, rel=1e-15)
        assert g_right(gapv) == pytest.approx(20 / 27, rel=1e-15)
        assert g_left(gapv) == pytest.approx(16 / 27, rel=1e-15)
        assert sag(gapv) == pytest.approx(20 / 27, rel=1e-15)

    def test_prefactor_simplification_at_n7(self):
        # 2n/n^2 and 2/n are the same float, so the shorter form is used.
        n = 7
        assert 2 * n / n**2 == 2 / n
        gapv = gaps_of([1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0])
        direct = (2 * n / n**2) * math.fsum(gapv.gaps)
        assert gini(gapv) == direct

    def test_permutation_of_input_is_bit_identical(self):
        values = [17.0, 2.0, 9.0, 4.0, 250.0, 4.0, 61.0]
        shuffled = [4.0, 250.0, 17.0, 61.0, 2.0, 9.0, 4.0]
        a, b = report(build_dataset(values)), report(build_dataset(shuffled))
        assert (a.gini, a.g_right, a.g_left, a.sag) == (
            b.gini,
            b.g_right,
            b.g_left,
            b.sag,
        )


class TestReport:
    def test_symmetric_fixture(self):
        result = report(build_dataset(SYMMETRIC_VALUES))
        assert result.skew_direction == "symmetric"
        assert result.n == 10
        assert result.mean == 10.0
        assert result.convex

    def test_all_equal_is_exactly_zero(self):
        result = report(build_dataset([1.0] * 5))
        assert result.gini == 0.0
        assert result.g_right == 0.0
        assert result.g_left == 0.0
        assert result.sag == 0.0
        assert result.skew_direction == "symmetric"

    def test_right_skew_case(self):
        result = report(build_dataset([0.0, 0.0, 3.0]))
        assert result.gini == pytest.approx(0.6667, abs=5e-5)
        assert result.g_right == pytest.approx(0.7407, abs=5e-5)
        assert result.g_left == pytest.approx(0.5926, abs=5e-5)
        assert result.sag == pytest.approx(0.7407, abs=5e-5)
        assert result.skew_direction == "right"

    def test_sag_is_max(self):
        result = report(build_dataset([0.0, 0.0, 3.0]))
        assert result.sag == pytest.approx(
            max(result.g_right, result.g_left), rel=1e-15
        )


class TestMetricsFromLorenz:
    def test_right_skewed_fixture(self):
        result = metrics_from_lorenz(points_from_q(RIGHT_SKEWED_Q))
        exp = RIGHT_SKEWED_EXPECTED
        assert result.gini == pytest.approx(exp["gini"], abs=1e-14)
        assert result.g_right == pytest.approx(exp["g_right"], abs=1e-14)
        assert result.g_left == pytest.approx(exp["g_left"], abs=1e-14)
        assert result.sag == pytest.approx(exp["sag"], abs=1e-14)
        assert result.skew_direction == exp["skew"]
        assert result.convex
        assert result.mean is None

    def test_left_skewed_fixture_not_convex(self):
        result = metrics_from_lorenz(points_from_q(LEFT_SKEWED_Q))
        exp = LEFT_SKEWED_EXPECTED
        assert result.gini == pytest.approx(exp["gini"], abs=1e-14)
        assert result.sag == pytest.approx(exp["sag"], abs=1e-14)
        assert result.skew_direction == "left"
        assert not result.convex

    def test_diagonal_points_all_zero(self):
        points = [(i / 8, i / 8) for i in range(1, 9)]
        result = metrics_from_lorenz(points)
        assert result.gini == 0.0
        assert result.sag == 0.0
        assert result.skew_direction == "symmetric"

    def test_leading_origin_dropped(self):
        with_origin = [(0.0, 0.0)] + points_from_q(RIGHT_SKEWED_Q)
        without = points_from_q(RIGHT_SKEWED_Q)
        assert metrics_from_lorenz(with_origin) == metrics_from_lorenz(without)

    def test_origin_with_nonzero_q_rejected(self):
        points = [(0.0, 0.2)] + points_from_q(RIGHT_SKEWED_Q)
        with pytest.raises(BadEndpointError):
            metrics_from_lorenz(points)

    def test_unequal_spacing_rejected(self):
        points = [(0.1, 0.05), (0.35, 0.2), (1.0, 1.0)]
        with pytest.raises(UnequalSpacingError):
            metrics_from_lorenz(points)

    def test_bad_final_q_rejected(self):
        points = [(0.5, 0.2), (1.0, 0.9)]
        with pytest.raises(BadEndpointError):
            metrics_from_lorenz(points)

    def test_too_few_points_rejected(self):
        with pytest.raises(EmptyOrSingletonError):
            metrics_from_lorenz([(1.0, 1.0)])
        with pytest.raises(EmptyOrSingletonError):
            metrics_from_lorenz([])

    def test_non_finite_points_rejected(self):
        points = [(0.5, float("nan")), (1.0, 1.0)]
        with pytest.raises(NonFiniteValueError, match="index 0"):
            metrics_from_lorenz(points)

    def test_agrees_with_dataset_pipeline(self):
        curve = lorenz_curve(build_dataset(SYMMETRIC_VALUES))
        from_points = metrics_from_lorenz(list(zip(curve.p, curve.q)))
        from_data = report(build_dataset(SYMMETRIC_VALUES))
        assert from_points.gini == from_data.gini
        assert from_points.g_right == from_data.g_right
        assert from_points.g_left == from_data.g_left
        assert from_points.sag == from_data.sag
