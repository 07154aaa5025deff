"""
Numerical checks of the identities satisfied by the fractional-integral
representation, packaged as :class:`CheckReport` rows.

Suites
------
oracle      quadrature vs. series on the (Re s, Im s, x) grid
bound       |Gamma(s) I^s f(x)| <= Gamma(Re s) eta(Re s, -x) on the same grid
norm        the weighted L1 norm of f(t) = 1/(e^-t + 1) equals 1
semigroup   I^a I^b f = I^(a+b) f = I^b I^a f
derivative  zeta(s, x) = (2^s - 1)/(2^s - 2) d/dx zeta(s + 1, x)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .complexfn import as_complex, gamma, prefactor_eta_to_zeta
from .errors import NonConvergence, PoleError, StepTooLarge
from .fraczeta import FracCoordinatePoint, frac_compose, frac_integral, theorem2_residual
from .oracle import eta_series
from .quadrature import DEFAULT_CONFIG, EvalConfig, QuadResult, fermi_weight, integrate_interval

ORACLE_RE = (0.3, 0.5, 2.0, 3.0)
ORACLE_IM = (0.0, 1.0, 5.0, 14.13)
ORACLE_X = (0.0, -0.5, -2.0)
ORACLE_GRID = tuple(
    (complex(re, im), x) for re in ORACLE_RE for im in ORACLE_IM for x in ORACLE_X
)
SEMIGROUP_PAIRS = ((0.5, 0.5), (0.75, 1.25), (1.5, 0.3))
SEMIGROUP_X = (0.0, -0.5, -2.0)
DERIVATIVE_S = (0.5, 2.0, 3.0, 2.0 + 5.0j)
DERIVATIVE_X = (-0.25, -1.0, -2.0)
DERIVATIVE_H0 = 1e-3

ORACLE_TOL = 1e-9
NORM_TOL = 1e-10
SEMIGROUP_TOL = 1e-6
DERIVATIVE_TOL = 1e-6

SUITES = ("semigroup", "derivative", "norm", "bound", "oracle")


@dataclass(frozen=True)
class CheckReport:
    """One verified (or skipped) identity at one point.

    ``passed`` is ``residual <= tolerance``; ``status`` is "pass", "fail",
    "pole" (point skipped, prefactor pole) or "nonconvergence".
    """

    check_name: str
    s: complex
    x: float
    residual: float
    tolerance: float
    passed: bool
    status: str
    detail: str = field(default="", compare=False)

    @property
    def point(self):
        return (self.s, self.x)

    @property
    def skipped(self) -> bool:
        return self.status == "pole"


def _report(name, s, x, residual, tolerance, detail=""):
    ok = bool(residual <= tolerance)
    return CheckReport(name, complex(s), float(x), float(residual), float(tolerance), ok, "pass" if ok else "fail", detail)


def _skip(name, s, x, status, detail):
    return CheckReport(name, complex(s), float(x), math.nan, math.nan, False, status, detail)


def _norm_halves(cfg: EvalConfig):
    """int_0^U f(-t) e^-t dt and int_0^U f(t) e^-t dt, plus the shared tail bound e^-U."""
    upper = -math.log(cfg.tail_tol_fraction * cfg.abs_tol)
    neg = integrate_interval(lambda t: fermi_weight(t) * np.exp(-t), 0.0, upper, cfg)
    pos = integrate_interval(lambda t: fermi_weight(-t) * np.exp(-t), 0.0, upper, cfg)
    return neg, pos, math.exp(-upper)


def norm_X1(cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """
    int_-inf^inf f(t) e^-|t| dt for f(t) = 1/(e^-t + 1).

    The negative half is folded onto [0, inf) with t -> -t, so the result is
    int_0^inf (f(t) + f(-t)) e^-t dt; the two pieces are integrated
    separately and f(t) + f(-t) = 1 is never used.
    """
    neg, pos, _ = _norm_halves(cfg)
    return (neg.value + pos.value).real


def norm_check(cfg: EvalConfig = DEFAULT_CONFIG) -> CheckReport:
    return _report("norm", 0.0, 0.0, abs(norm_X1(cfg) - 1.0), NORM_TOL)


def lemma3_bound_check(s, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> CheckReport:
    """
    |Gamma(s) (I^s f)(x)| <= Gamma(Re s) eta(Re s, -x), the modulus of the
    integral against the integral of the modulus.

    ``residual`` is the excess of the left side over the bound; the
    tolerance is the combined error of both sides.  For real s the two
    sides coincide.
    """
    s = as_complex(s)
    p = FracCoordinatePoint(s, x)
    res: QuadResult = frac_integral(p, cfg, full_output=True)
    g = gamma(s)
    lhs = abs(g * res.value)
    sigma = s.real
    series = eta_series(sigma, -p.x, 1e-14)
    g_sigma = math.gamma(sigma)
    rhs = g_sigma * series.value.real
    tol = abs(g) * res.err_estimate + g_sigma * series.truncation_bound + 64 * np.finfo(float).eps * g_sigma
    return _report("bound", s, p.x, lhs - rhs, tol, f"lhs={lhs:.17g} rhs={rhs:.17g}")


def oracle_check(s, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> CheckReport:
    s = as_complex(s)
    p = FracCoordinatePoint(s, x)
    quad = frac_integral(p, cfg)
    ref = eta_series(s, -p.x, 1e-14).value
    return _report("oracle", s, p.x, abs(quad - ref) / (1.0 + abs(ref)), ORACLE_TOL)


def semigroup_check(alpha, beta, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> CheckReport:
    """Worse of the two relative residuals |I^a I^b f - I^(a+b) f| and |I^b I^a f - I^(a+b) f|."""
    alpha, beta = complex(alpha), complex(beta)
    direct = frac_integral(FracCoordinatePoint(alpha + beta, x), cfg)
    ab = frac_compose(alpha, beta, x, cfg)
    ba = frac_compose(beta, alpha, x, cfg)
    scale = 1.0 + abs(direct)
    r_ab = abs(ab - direct) / scale
    r_ba = abs(ba - direct) / scale
    detail = f"alpha={alpha.real:g}{alpha.imag:+g}i beta={beta.real:g}{beta.imag:+g}i commute={r_ba:.3g}"
    return _report("semigroup", alpha + beta, x, max(r_ab, r_ba), SEMIGROUP_TOL, detail)


def derivative_check(s, x: float, cfg: EvalConfig = DEFAULT_CONFIG, h0: float = DERIVATIVE_H0) -> CheckReport:
    return _report("derivative", s, x, theorem2_residual(s, x, cfg, h0), DERIVATIVE_TOL)


def _guarded(name, s, x, fn, cfg, needs_prefactor):
    try:
        if needs_prefactor:
            prefactor_eta_to_zeta(s, cfg.pole_tol)
        return fn()
    except PoleError as exc:
        return _skip(name, s, x, "pole", str(exc))
    except (NonConvergence, StepTooLarge) as exc:
        return _skip(name, s, x, "nonconvergence", str(exc))


def run_suite(name: str, cfg: EvalConfig = DEFAULT_CONFIG, s_values=None) -> list[CheckReport]:
    """
    Run one suite over its grid.  ``s_values`` replaces the grid's orders
    (for the oracle, bound and derivative suites).
    """
    if name == "all":
        return [r for suite in SUITES for r in run_suite(suite, cfg, s_values)]
    if name == "norm":
        return [norm_check(cfg)]
    if name == "semigroup":
        return [
            _guarded("semigroup", a + b, x, lambda a=a, b=b, x=x: semigroup_check(a, b, x, cfg), cfg, False)
            for a, b in SEMIGROUP_PAIRS
            for x in SEMIGROUP_X
        ]
    if name == "derivative":
        orders = DERIVATIVE_S if s_values is None else s_values
        return [
            _guarded("derivative", s, x, lambda s=s, x=x: derivative_check(s, x, cfg), cfg, True)
            for s in orders
            for x in DERIVATIVE_X
        ]
    if name in ("oracle", "bound"):
        grid = ORACLE_GRID if s_values is None else [(complex(s), x) for s in s_values for x in ORACLE_X]
        fn = oracle_check if name == "oracle" else lemma3_bound_check
        return [
            _guarded(name, s, x, lambda s=s, x=x: fn(s, x, cfg), cfg, False)
            for s, x in grid
        ]
    raise ValueError(f"unknown suite {name!r}")


def suite_passed(reports) -> bool:
    """True when every evaluated report passed; pole skips do not count against it."""
    return all(r.passed or r.skipped for r in reports)
