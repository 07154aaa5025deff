import math

import pytest

from rlzeta.checks import (
    ORACLE_GRID,
    CheckReport,
    _norm_halves,
    lemma3_bound_check,
    norm_check,
    norm_X1,
    oracle_check,
    run_suite,
    semigroup_check,
    suite_passed,
)
from rlzeta.quadrature import DEFAULT_CONFIG


class TestNorm:
    def test_unit_norm(self):
        assert abs(norm_X1() - 1.0) <= 1e-10

    def test_halves(self):
        neg, pos, tail = _norm_halves(DEFAULT_CONFIG)
        # int_0^inf e^-t / (e^t + 1) dt = 1 - ln 2 and int_0^inf e^-t / (e^-t + 1) dt = ln 2
        assert abs(neg.value - (1.0 - math.log(2.0))) <= 1e-11
        assert abs(pos.value - math.log(2.0)) <= 1e-11
        assert tail <= 1e-11

    def test_report(self):
        r = norm_check()
        assert r.passed and r.status == "pass" and r.residual <= r.tolerance == 1e-10


class TestModulusBound:
    @pytest.mark.parametrize("s, x", [(2 + 5j, 0.0), (0.5 + 30j, -1.0), (0.3 + 14.13j, -2.0)])
    def test_complex_orders_pass(self, s, x):
        r = lemma3_bound_check(s, x)
        assert r.passed, r.detail

    @pytest.mark.parametrize("s, x", [(0.5, 0.0), (2.0, -1.0), (3.0, -2.0)])
    def test_real_orders_tight(self, s, x):
        r = lemma3_bound_check(s, x)
        assert r.passed
        assert abs(r.residual) <= r.tolerance


class TestReports:
    def test_passed_iff_within_tolerance(self):
        r = oracle_check(0.5 + 5j, -0.5)
        assert r.passed == (r.residual <= r.tolerance)
        assert r.point == (0.5 + 5j, -0.5)

    def test_semigroup_report(self):
        r = semigroup_check(0.75, 1.25, -0.5)
        assert r.passed and r.s == 2.0 and "commute" in r.detail

    def test_suite_sizes(self):
        assert len(run_suite("semigroup")) == 9
        assert len(run_suite("derivative")) == 12
        assert len(run_suite("norm")) == 1

    def test_oracle_suite(self):
        reports = run_suite("oracle")
        assert len(reports) == len(ORACLE_GRID)
        assert suite_passed(reports)

    def test_pole_orders_skipped(self):
        reports = run_suite("derivative", s_values=[1.0, 2.0])
        poles = [r for r in reports if r.status == "pole"]
        assert len(poles) == 3 and all(r.skipped and not r.passed for r in poles)
        assert all("s = 1" in r.detail for r in poles)
        assert suite_passed(reports)

    def test_failure_detected(self):
        bad = CheckReport("x", 1.0, 0.0, 1.0, 0.5, False, "fail")
        assert not suite_passed([bad])

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("nonsense")
