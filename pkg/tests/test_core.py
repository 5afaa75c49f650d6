import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaline.core import (
    DEFAULT_CONFIG,
    EvalConfig,
    em_zeta,
    theta,
    z_function,
    z_values,
    zeta_half,
)
from zetaline.errors import PreconditionError

EPS = np.finfo(float).eps

# mpmath at 30 digits (tools/freeze_oracles.py)
THETA_100 = 87.972165231787219625
THETA_20 = 1.1868948084444840448
THETA_3 = -2.9945646960108252362
ZETA_HALF = -1.4603545088095868129
Z_REF = {
    5.0: -0.73886342827526476436,
    17.5: 2.3018457553350568833,
    50.0: -0.34073500595502498275,
    99.9: 2.6485288552009216425,
    1000.0: 0.99779463752158661399,
    5000.25: 0.052100543914359267735,
}
ZETA_1000 = complex(0.35633436719439605507, 0.93199783123299366512)
ZETA_075_40 = complex(0.82789547359127058885, -0.70704801798540988588)
GAMMA_1 = 14.13472514173469379


class TestTheta:
    def test_zero(self):
        assert theta(0.0) == 0.0

    def test_odd_at_50(self):
        assert theta(-50.0) == -theta(50.0)

    @pytest.mark.parametrize("t, ref", [(100.0, THETA_100), (20.0, THETA_20), (3.0, THETA_3)])
    def test_against_arbitrary_precision(self, t, ref):
        assert theta(t) == pytest.approx(ref, abs=1e-9)

    def test_series_and_log_gamma_agree_at_switch(self):
        # both sides of the switch height give a continuous phase
        lo, hi = theta(10.0 - 1e-9), theta(10.0 + 1e-9)
        assert abs(hi - lo) < 1e-8

    def test_array_input(self):
        t = np.array([0.0, 3.0, 100.0])
        out = theta(t)
        assert out.shape == (3,)
        assert out[2] == pytest.approx(THETA_100, abs=1e-9)

    @given(st.floats(0, 1e6))
    def test_odd_symmetry(self, t):
        assert abs(theta(-t) + theta(t)) <= 4 * EPS * max(1.0, abs(theta(t)))


class TestZ:
    def test_zeta_at_half(self):
        s = z_function(0.0)
        assert s.z == pytest.approx(ZETA_HALF, abs=1e-12)
        assert s.zeta_im == 0.0
        assert s.zeta_re == pytest.approx(ZETA_HALF, abs=1e-12)

    @pytest.mark.parametrize("t", sorted(Z_REF))
    def test_against_arbitrary_precision(self, t):
        s = z_function(t)
        assert abs(s.z - Z_REF[t]) <= s.err_bound
        assert s.err_bound < 1e-6

    def test_first_zero_is_small(self):
        assert abs(z_function(14.134725).z) < 1e-6

    def test_zeta_at_1000(self):
        s = zeta_half(1000.0)
        assert abs(s.zeta - ZETA_1000) < 1e-8
        assert abs(abs(s.zeta) - abs(s.z)) < 1e-12

    def test_rejects_negative_t(self):
        with pytest.raises(PreconditionError):
            z_function(-1.0)
        with pytest.raises(PreconditionError):
            z_values(np.array([1.0, -2.0]))

    def test_route_switch_is_seamless(self):
        cfg = DEFAULT_CONFIG
        t = np.array([cfg.rs_min_t - 1e-9, cfg.rs_min_t])
        z, err = z_values(t)
        assert abs(z[1] - z[0]) <= err.sum() + 1e-6

    def test_parallel_chunks_identical(self):
        t = np.linspace(0, 2000, 5000)
        assert np.array_equal(z_values(t)[0], z_values(t, jobs=2)[0])

    @settings(max_examples=60, deadline=None)
    @given(st.floats(0, 1e5))
    def test_modulus_identity(self, t):
        s = zeta_half(t)
        assert abs(math.hypot(s.zeta_re, s.zeta_im) - abs(s.z)) <= 8 * EPS * (1 + abs(s.z))

    @settings(max_examples=60, deadline=None)
    @given(st.floats(0, 1e5))
    def test_even_and_conjugate(self, t):
        a, b = zeta_half(t), zeta_half(-t)
        assert abs(a.z - b.z) <= 4 * EPS * (1 + abs(a.z))
        assert abs(a.zeta - b.zeta.conjugate()) <= 8 * EPS * (1 + abs(a.z))

    @settings(max_examples=60, deadline=None)
    @given(st.floats(60, 1e5))
    def test_more_corrections_never_raise_the_bound(self, t):
        bounds = [z_values(np.array([t]), EvalConfig(rs_corrections=k))[1][0] for k in range(5)]
        assert all(b1 <= b0 for b0, b1 in zip(bounds, bounds[1:]))

    @settings(max_examples=40, deadline=None)
    @given(st.floats(0, 1e5))
    def test_bound_finite_and_nonnegative(self, t):
        s = z_function(t)
        assert 0 <= s.err_bound < math.inf


class TestEulerMaclaurin:
    def test_zeta_two(self):
        v, b = em_zeta(2.0, 0.0, 50)
        assert abs(v - math.pi**2 / 6) < 1e-10
        assert b < 1e-10

    def test_term_counts_agree_at_half(self):
        a, _ = em_zeta(0.5, 0.0, 50)
        b, _ = em_zeta(0.5, 0.0, 200)
        assert abs(a - b) < 1e-10
        assert a.real == pytest.approx(ZETA_HALF, abs=1e-12)

    def test_off_line(self):
        v, b = em_zeta(0.75, 40.0, 50)
        assert abs(v - ZETA_075_40) <= b

    def test_agrees_with_riemann_siegel_at_50(self):
        v, b = em_zeta(0.5, 50.0, 200)
        rs = zeta_half(50.0, EvalConfig(rs_min_t=10.0))
        assert abs(v - rs.zeta) <= b + rs.err_bound

    def test_quasi_random_oracle_agreement(self):
        rs_cfg = EvalConfig(rs_min_t=10.0)
        k = np.arange(1, 101)
        for t in 10 + 490 * np.mod(k * (math.sqrt(5) - 1) / 2, 1):
            v, b = em_zeta(0.5, float(t), 400)
            rs = zeta_half(float(t), rs_cfg)
            assert abs(v - rs.zeta) <= b + rs.err_bound + 8 * EPS * (1 + abs(v))

    @pytest.mark.parametrize(
        "args", [(0.3, 0.0, 50), (2.2, 0.0, 50), (0.5, 0.0, 9), (0.5, 600.0, 50), (1.0, 0.0, 50)]
    )
    def test_domain(self, args):
        with pytest.raises(PreconditionError):
            em_zeta(*args)


class TestConfig:
    @pytest.mark.parametrize(
        "kw", [{"rs_min_t": 0.0}, {"em_terms": 9}, {"rs_corrections": 5}, {"rs_corrections": -1}]
    )
    def test_invalid(self, kw):
        with pytest.raises(PreconditionError):
            EvalConfig(**kw)

    def test_first_zero_location(self):
        z = z_values(np.array([GAMMA_1 - 1e-6, GAMMA_1 + 1e-6]))[0]
        assert z[0] * z[1] < 0
