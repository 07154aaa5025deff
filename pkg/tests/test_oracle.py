import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rlzeta.errors import DomainError, PoleError, ToleranceUnreachable
from rlzeta.oracle import (
    MAX_ACCEL_TERMS,
    _plain_sum,
    cvz_weights,
    eta_series,
    eta_series_array,
    zeta_series,
)


class TestEtaSeries:
    @pytest.mark.parametrize("method", ["auto", "plain", "accelerated"])
    def test_log2(self, method):
        tol = 1e-6 if method == "plain" else 1e-13
        res = eta_series(1.0, 0.0, tol, method=method)
        assert abs(res.value - math.log(2.0)) <= res.truncation_bound + 1e-15
        assert res.truncation_bound <= tol

    def test_eta_two(self):
        assert abs(eta_series(2.0).value - math.pi**2 / 12) < 1e-14

    @pytest.mark.parametrize("y", [0.01, 0.5, 3.0])
    def test_mercator(self, y):
        assert abs(eta_series(1.0, y, 1e-14).value - math.log1p(math.exp(-y))) < 1e-14

    def test_frozen_shifted_value(self):
        # sum (-1)^(n-1) e^(-n/2) n^(-1.5 - 2i), cross-checked against mpmath polylog
        expected = 0.568143531649877 + 0.09896481995129701j
        with mpmath.workdps(30):
            ref = complex(-mpmath.polylog(1.5 + 2j, -mpmath.exp(-0.5)))
        assert abs(ref - expected) < 1e-15
        assert abs(eta_series(1.5 + 2j, 0.5, 1e-14).value - expected) < 1e-14

    @pytest.mark.parametrize("s", [2.0, 3.5 + 2j, 2.0 - 10j, 6.0 + 30j])
    def test_plain_and_accelerated_agree(self, s):
        plain = eta_series(s, 0.0, 1e-13, method="plain")
        accel = eta_series(s, 0.0, 1e-14, method="accelerated")
        assert abs(plain.value - accel.value) <= 1e-12

    @pytest.mark.parametrize("s, y", [(0.5 + 3j, 0.2), (2.0, 1.0), (0.3, 0.05), (1.0 + 14j, 2.0)])
    def test_tail_bound_honest(self, s, y):
        res = eta_series(s, y, 1e-10, method="plain")
        extended = _plain_sum(complex(s), y, res.terms_used + 10)
        assert abs(extended - res.value) <= res.truncation_bound

    def test_accelerated_bound_honest(self):
        s = 0.5 + 14.134725j
        coarse = eta_series(s, 0.0, 1e-6, method="accelerated")
        fine = eta_series(s, 0.0, 1e-14, method="accelerated")
        assert abs(coarse.value - fine.value) <= coarse.truncation_bound + fine.truncation_bound

    @settings(max_examples=60, deadline=None)
    @given(st.floats(0.1, 6.0), st.floats(-40.0, 40.0), st.floats(0.0, 3.0))
    def test_conjugate_symmetry(self, a, b, y):
        s = complex(a, b)
        r = eta_series(s, y, 1e-12)
        rc = eta_series(s.conjugate(), y, 1e-12)
        assert abs(rc.value - r.value.conjugate()) <= 64 * np.finfo(float).eps * (1 + abs(r.value))

    def test_plain_cap(self):
        with pytest.raises(ToleranceUnreachable):
            eta_series(0.1, 0.0, 1e-14, method="plain")

    def test_accelerated_cap(self):
        with pytest.raises(ToleranceUnreachable):
            eta_series(0.5 + 2000j, 0.0, 1e-14, method="accelerated")

    @pytest.mark.parametrize("s, y, tol", [(0.0, 0.0, 1e-13), (1.0, -1.0, 1e-13), (1.0, 0.0, 1e-15)])
    def test_arguments(self, s, y, tol):
        with pytest.raises(ValueError):
            eta_series(s, y, tol)

    def test_array_matches_scalar(self):
        s = 0.75 + 1j
        ys = np.array([0.0, 0.01, 0.3, 2.0, 25.0])
        values, bound = eta_series_array(s, ys, 1e-14)
        for y, v in zip(ys, values):
            assert abs(v - eta_series(s, y, 1e-14).value) <= 2e-14
        assert bound <= 1e-14

    def test_array_domain(self):
        with pytest.raises(DomainError):
            eta_series_array(1.0, [0.5, -0.1])


class TestCvzWeights:
    def test_range(self):
        w = cvz_weights(40)
        assert w.shape == (40,)
        assert np.all((w >= 0.0) & (w <= 1.0))
        assert np.all(np.diff(w) <= 0.0)
        assert w[0] > 1 - 1e-12

    def test_cap_constant(self):
        assert MAX_ACCEL_TERMS == 1000


class TestZetaSeries:
    def test_zeta_two(self):
        assert abs(zeta_series(2.0).value - math.pi**2 / 6) < 1e-13

    def test_zeta_four(self):
        assert abs(zeta_series(4.0).value - math.pi**4 / 90) < 1e-13

    def test_zeta_half(self):
        assert abs(zeta_series(0.5).value + 1.4603545088095868) < 1e-13

    def test_first_zero(self):
        assert abs(zeta_series(0.5 + 14.134725j).value) < 1e-4

    def test_pole(self):
        with pytest.raises(PoleError):
            zeta_series(1.0)
