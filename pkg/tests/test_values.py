import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from zetaline.core import z_values
from zetaline.errors import DegenerateGrid, OutOfWindow, PreconditionError, StepTooCoarse
from zetaline.values import (
    band_measure,
    clt_distribution,
    default_measure_step,
    gaussian_band_prediction,
    level_set_measure,
    phi,
    sample_grid,
    selberg_moment,
    selberg_window,
    small_exponent_integral,
    small_exponent_max,
    s_diff_moment,
)
from zetaline.zeros import count_main_term, s_value

# mpmath: midpoint sum of [|Z| <= 1] over (0, 100] at step 2e-3 (tools/freeze_oracles.py)
A1_100_ORACLE = 42.234
A1_100_ORACLE_STEP = 2e-3
PHI_1 = 0.84134474606854294859
PHI_M25 = 0.006209665325776135167


@pytest.fixture(scope="module")
def grid_100():
    return sample_grid(100.0)


@pytest.fixture(scope="module")
def grid_1e3():
    return sample_grid(1000.0)


@pytest.fixture(scope="module")
def grid_1e4():
    return sample_grid(10000.0)


class TestLevelSet:
    def test_infinite_level_is_everything(self, grid_100):
        est = level_set_measure(100.0, math.inf, samples=grid_100)
        assert est.value == pytest.approx(100.0, abs=1e-12)

    def test_against_dense_oracle(self, grid_100):
        est = level_set_measure(100.0, 1.0, samples=grid_100)
        # midpoint sums err by at most one step per crossing
        assert abs(est.value - A1_100_ORACLE) <= est.crossings * A1_100_ORACLE_STEP + est.uncertainty

    def test_dense_midpoint_oracle_at_1e3(self, grid_1e3):
        h = 1e-3
        t = h * (np.arange(int(1000 / h)) + 0.5)
        oracle = h * np.count_nonzero(np.abs(z_values(t)[0]) <= 1.0)
        est = level_set_measure(1000.0, 1.0, samples=grid_1e3)
        assert abs(est.value - oracle) <= est.crossings * h + est.uncertainty

    def test_step_refinement(self):
        for c in (0.5, 1.0, 2.0):
            a = level_set_measure(1000.0, c)
            b = level_set_measure(1000.0, c, step=a.resolution / 2)
            assert abs(a.value - b.value) <= a.uncertainty + b.uncertainty + 2 * b.resolution * b.crossings

    def test_reproducible(self):
        a = level_set_measure(500.0, 1.0)
        b = level_set_measure(500.0, 1.0)
        assert a == b

    def test_monotone_in_c(self, grid_1e3):
        values = [level_set_measure(1000.0, c, samples=grid_1e3).value for c in (0.1, 0.5, 1, 2, 5, 50)]
        assert all(x <= y for x, y in zip(values, values[1:]))

    def test_monotone_in_T(self):
        values = [level_set_measure(T, 1.0).value for T in (100.0, 300.0, 1000.0)]
        assert values[0] <= values[1] <= values[2]

    def test_ratio_reasonable(self, grid_1e4):
        est = level_set_measure(10000.0, 1.0, samples=grid_1e4)
        assert 0.2 < est.ratio_to_T < 0.8

    def test_coarse_step_rejected(self):
        with pytest.raises(StepTooCoarse):
            level_set_measure(1000.0, 1.0, step=5.0)

    def test_bad_arguments(self, grid_100):
        with pytest.raises(PreconditionError):
            level_set_measure(100.0, 0.0)
        with pytest.raises(PreconditionError):
            level_set_measure(-5.0, 1.0)
        with pytest.raises(PreconditionError):
            level_set_measure(50.0, 1.0, samples=grid_100)


class TestBand:
    @pytest.mark.parametrize("c1,c2", [(0.5, 1.0), (0.2, 3.0), (1.0, 1.5)])
    def test_additivity(self, grid_1e3, c1, c2):
        band = band_measure(1000.0, c1, c2, samples=grid_1e3)
        lo = level_set_measure(1000.0, c1, samples=grid_1e3)
        hi = level_set_measure(1000.0, c2, samples=grid_1e3)
        assert abs(band.value + lo.value - hi.value) <= band.uncertainty + 1e-9

    def test_degenerate_band(self, grid_100):
        assert band_measure(100.0, 1.0, 1.0, samples=grid_100).value == 0.0

    def test_inverted_band(self):
        with pytest.raises(PreconditionError):
            band_measure(100.0, 2.0, 1.0)

    def test_gaussian_prediction_same_order(self, grid_1e4):
        # Gaussian heuristic for the band e^-1 <= |zeta| <= e; agreement at
        # desk heights is only up to the slowly decaying error term
        band = band_measure(10000.0, math.exp(-1), math.e, samples=grid_1e4)
        pred = gaussian_band_prediction(10000.0, -1.0, 1.0)
        assert 0.5 < band.value / pred < 1.5

    def test_gaussian_prediction_whole_line(self):
        assert gaussian_band_prediction(1e4, -math.inf, math.inf) == pytest.approx(1e4)


class TestPhi:
    def test_zero(self):
        assert phi(0.0) == 0.5

    @pytest.mark.parametrize("y,ref", [(1.0, PHI_1), (-2.5, PHI_M25)])
    def test_reference(self, y, ref):
        assert abs(phi(y) - ref) <= 1e-12

    def test_limits(self):
        assert phi(-math.inf) == 0.0 and phi(math.inf) == 1.0

    def test_quadrature_oracle(self):
        ys = np.linspace(-5, 5, 20)
        for y in ys:
            q, _ = integrate.quad(lambda u: math.exp(-u * u / 2) / math.sqrt(2 * math.pi), -math.inf, y, epsabs=1e-14)
            assert abs(phi(y) - q) <= 1e-10

    @given(st.floats(-30, 30))
    def test_reflection(self, y):
        assert phi(y) + phi(-y) == pytest.approx(1.0, abs=1e-15)

    @given(st.floats(-30, 30), st.floats(1e-6, 5))
    def test_monotone(self, y, dy):
        assert phi(y + dy) >= phi(y)


class TestDistribution:
    def test_cdf_validity(self, grid_1e4):
        r = clt_distribution(10000.0, samples=grid_1e4)
        assert np.all((r.empirical_cdf >= 0) & (r.empirical_cdf <= 1))
        assert np.all(np.diff(r.empirical_cdf) >= 0)
        assert r.ks_distance == pytest.approx(np.max(np.abs(r.empirical_cdf - r.phi_cdf)))

    def test_phi_column(self, grid_1e3):
        r = clt_distribution(1000.0, y_grid=[-1.0, 0.0, 1.0], samples=grid_1e3)
        assert r.phi_cdf[1] == 0.5

    def test_upper_tail(self, grid_1e4):
        r = clt_distribution(10000.0, y_grid=[6.0], samples=grid_1e4)
        assert r.empirical_cdf[0] >= 0.999

    def test_ks_small(self, grid_1e4):
        assert clt_distribution(10000.0, samples=grid_1e4).ks_distance < 0.1

    def test_low_height_rejected(self):
        with pytest.raises(PreconditionError):
            clt_distribution(50.0)

    @pytest.mark.parametrize("y", [[], [1.0, 0.0], [0.0, 0.0]])
    def test_degenerate_grid(self, grid_100, y):
        with pytest.raises(DegenerateGrid):
            clt_distribution(100.0, y_grid=y, samples=grid_100)


class TestSelberg:
    def test_small_k_is_zeroth_moment(self, grid_1e4):
        r = selberg_moment(10000.0, 1e-9, samples=grid_1e4, enforce_window=False)
        assert r.exponent < 1e-8
        assert r.empirical == pytest.approx(1.0, abs=1e-6)
        assert r.predicted == pytest.approx(1.0)

    def test_first_moment(self, grid_1e4):
        r = selberg_moment(10000.0, 1.0, samples=grid_1e4)
        assert r.predicted == pytest.approx(math.exp(0.5))
        assert r.rel_error < 0.25

    def test_step_halving(self):
        a = selberg_moment(10000.0, 1.0, step=0.02)
        b = selberg_moment(10000.0, 1.0, step=0.01)
        assert abs(a.empirical - b.empirical) < 0.01 * b.empirical

    def test_window(self):
        lo, hi = selberg_window(1e4)
        assert lo == pytest.approx(math.exp(-math.sqrt(math.log(math.log(1e4)))))
        assert hi == 3
        with pytest.raises(OutOfWindow):
            selberg_moment(1e4, 3.5)
        with pytest.raises(OutOfWindow):
            selberg_moment(1e4, lo / 2)


class TestSmallExponent:
    def test_lambda_zero(self, grid_1e3):
        assert small_exponent_integral(1000.0, 0.0, samples=grid_1e3).value == pytest.approx(1000.0, abs=1e-9)

    def test_window(self):
        lam = small_exponent_max(1e4)
        ll = math.log(math.log(1e4))
        psi = ll / (9 * math.log(ll) ** 2)
        assert lam == pytest.approx((psi * ll) ** -0.5)
        with pytest.raises(OutOfWindow):
            small_exponent_integral(1e4, lam * 1.01)
        with pytest.raises(OutOfWindow):
            small_exponent_integral(1e4, -0.1)

    @pytest.mark.parametrize("frac", [0.1, 0.5, 1.0])
    def test_bounded_below_by_large_value_measure(self, grid_1e3, frac):
        lam = frac * small_exponent_max(1000.0)
        value = small_exponent_integral(1000.0, lam, samples=grid_1e3).value
        below = level_set_measure(1000.0, 1.0, samples=grid_1e3)
        assert value >= 1000.0 - below.value - below.uncertainty


class TestSDiff:
    def test_zero_free_window(self, table_100):
        T, H, h = 2.0, 2.0, 0.5
        r = s_diff_moment(T, H, h, 2, table_100)
        oracle, _ = integrate.quad(
            lambda t: (count_main_term(t + h) - count_main_term(t)) ** 4, T, T + H, epsabs=1e-13
        )
        assert r.empirical == pytest.approx(oracle, rel=1e-10)

    def test_direct_summation_oracle(self, table_1e4):
        T, H, h = 1000.0, 900.0, 0.1
        r = s_diff_moment(T, H, h, 1, table_1e4)
        step = 2e-4
        t = T + step * (np.arange(int(round(H / step))) + 0.5)
        oracle = float(np.sum((s_value(t + h, table_1e4) - s_value(t, table_1e4)) ** 2) * step)
        # a midpoint sum misplaces at most one step of each jump
        jumps = 2 * np.count_nonzero((table_1e4.ordinates > T) & (table_1e4.ordinates < T + H + h))
        assert abs(r.empirical - oracle) <= jumps * step * 4
        assert 0.5 < r.empirical / r.predicted < 2

    @settings(max_examples=10, deadline=None)
    @given(st.floats(0.01, 0.99), st.integers(1, 3))
    def test_nonnegative(self, table_1e3, h, k):
        assert s_diff_moment(500.0, 100.0, h, k, table_1e3).empirical >= 0

    def test_preconditions(self, table_1e3):
        with pytest.raises(OutOfWindow):
            s_diff_moment(1000.0, 10.0, 0.1, 1, table_1e3)
        with pytest.raises(OutOfWindow):
            s_diff_moment(1000.0, 900.0, 1.5, 1, table_1e3)
        with pytest.raises(PreconditionError):
            s_diff_moment(1000.0, 900.0, 0.1, 0, table_1e3)


def test_default_step():
    assert default_measure_step(1e4) == pytest.approx(2 * math.pi / (16 * math.log(1e4 / (2 * math.pi))))
