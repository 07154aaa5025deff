"""
Incomplete eta and zeta functions and their fractional-integral form.

Two coordinates are in play.  The incomplete eta function

    eta(s, x) = 1/Gamma(s) int_x^inf (t - x)^(s-1) / (e^t + 1) dt,   x >= 0,

is parameterized by a shift x >= 0 (:class:`EtaCoordinatePoint`).  The
Riemann-Liouville integral with lower limit -inf of f(t) = 1/(e^-t + 1),

    (I^s f)(x) = 1/Gamma(s) int_-inf^x (x - t)^(s-1) f(t) dt,   x <= 0,

is parameterized by its upper limit x <= 0 (:class:`FracCoordinatePoint`).
Substituting t -> -t and then u = t + x turns the second into the first
with the shift negated: (I^s f)(x) = eta(s, -x).  The conversion lives in
:meth:`FracCoordinatePoint.to_eta` and nowhere else.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .complexfn import as_complex, log_gamma, prefactor_eta_to_zeta, prefactor_theorem2
from .errors import DomainError, StepTooLarge
from .oracle import eta_series_array
from .quadrature import (
    DEFAULT_CONFIG,
    EvalConfig,
    QuadResult,
    fermi_power_integral,
    weighted_outer_integral,
)

_INNER_SERIES_TOL = 1e-14


@dataclass(frozen=True)
class EtaCoordinatePoint:
    s: complex
    x: float

    def __post_init__(self):
        s = as_complex(self.s)
        x = float(self.x)
        if s.real <= 0.0:
            raise DomainError(f"Re(s) must be > 0, got {s!r}")
        if not (x >= 0.0 and math.isfinite(x)):
            raise DomainError(f"eta shift x must be finite and >= 0, got {x!r}")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "x", x + 0.0)


@dataclass(frozen=True)
class FracCoordinatePoint:
    s: complex
    x: float

    def __post_init__(self):
        s = as_complex(self.s)
        x = float(self.x)
        if s.real <= 0.0:
            raise DomainError(f"Re(s) must be > 0, got {s!r}")
        if not (x <= 0.0 and math.isfinite(x)):
            raise DomainError(f"fractional-integral limit x must be finite and <= 0, got {x!r}")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "x", x + 0.0)

    def to_eta(self) -> EtaCoordinatePoint:
        return EtaCoordinatePoint(self.s, -self.x)


def _scaled(res: QuadResult, factor: complex) -> QuadResult:
    return QuadResult(res.value * factor, res.err_estimate * abs(factor), res.n_evals, res.truncation_point)


def _eta_result(p: EtaCoordinatePoint, cfg: EvalConfig) -> QuadResult:
    lg = log_gamma(p.s)
    gamma_abs = math.exp(lg.real)
    res = fermi_power_integral(p.s, p.x, cfg, abs_tol=cfg.abs_tol * gamma_abs)
    inv_gamma = cmath.exp(-lg) if p.s.imag else complex(math.exp(-lg.real), 0.0)
    return _scaled(res, inv_gamma)


def eta_incomplete(p: EtaCoordinatePoint, cfg: EvalConfig = DEFAULT_CONFIG, *, full_output: bool = False):
    """
    eta(s, x) by quadrature, divided by Gamma(s).

    The quadrature tolerance is scaled by |Gamma(s)| so ``cfg.abs_tol``
    applies to eta itself.  With ``full_output`` a :class:`QuadResult` is
    returned whose error estimate also refers to eta.
    """
    res = _eta_result(p, cfg)
    return res if full_output else res.value


def zeta_incomplete(p: EtaCoordinatePoint, cfg: EvalConfig = DEFAULT_CONFIG, *, full_output: bool = False):
    """zeta(s, x) = 2^s / (2^s - 2) * eta(s, x); raises PoleError where 2^s = 2."""
    pref = prefactor_eta_to_zeta(p.s, cfg.pole_tol).value
    res = _scaled(_eta_result(p, cfg), pref)
    return res if full_output else res.value


def frac_integral(p: FracCoordinatePoint, cfg: EvalConfig = DEFAULT_CONFIG, *, full_output: bool = False):
    """(I^s f)(x) for f(t) = 1/(e^-t + 1), lower limit -inf, upper limit x <= 0."""
    return eta_incomplete(p.to_eta(), cfg, full_output=full_output)


def zeta_frac(p: FracCoordinatePoint, cfg: EvalConfig = DEFAULT_CONFIG, *, full_output: bool = False):
    """zeta(s, x) = 2^s / (2^s - 2) (I^s f)(x) for x <= 0; equals zeta(s) at x = 0."""
    return zeta_incomplete(p.to_eta(), cfg, full_output=full_output)


def zeta_complete(s, cfg: EvalConfig = DEFAULT_CONFIG, *, full_output: bool = False):
    """Riemann zeta(s) for Re s > 0 off the prefactor poles."""
    return zeta_frac(FracCoordinatePoint(s, 0.0), cfg, full_output=full_output)


def frac_compose(alpha, beta, x: float, cfg: EvalConfig = DEFAULT_CONFIG, *, full_output: bool = False):
    """
    I^alpha applied to I^beta f, evaluated at x <= 0.

    Written in the outer variable u = x - t this is

        1/Gamma(alpha) int_0^inf u^(alpha-1) eta(beta, u - x) du.

    The inner eta comes from the series oracle, or from quadrature when
    ``cfg.nested_compose`` is set (independent of the series, much slower).
    """
    alpha = as_complex(alpha, "alpha")
    beta = as_complex(beta, "beta")
    if alpha.real <= 0.0 or beta.real <= 0.0:
        raise DomainError(f"frac_compose requires Re(alpha), Re(beta) > 0, got {alpha!r}, {beta!r}")
    x = FracCoordinatePoint(alpha, x).x

    # |eta(beta, y)| <= Gamma(Re beta) / |Gamma(beta)| * e^-y
    lg_beta = log_gamma(beta)
    env_const = math.exp(math.lgamma(beta.real) - lg_beta.real)

    if cfg.nested_compose:
        def inner(ys):
            return np.array([eta_incomplete(EtaCoordinatePoint(beta, y), cfg) for y in ys], dtype=complex)
    else:
        def inner(ys):
            return eta_series_array(beta, ys, _INNER_SERIES_TOL)[0]

    lg_alpha = log_gamma(alpha)
    gamma_abs = math.exp(lg_alpha.real)
    res = weighted_outer_integral(
        alpha, x, inner, cfg, envelope=(1.0, env_const), abs_tol=cfg.abs_tol * gamma_abs
    )
    res = _scaled(res, cmath.exp(-lg_alpha))
    return res if full_output else res.value


def richardson_derivative(
    func: Callable[[float], complex],
    x: float,
    h0: float,
    *,
    one_sided: bool = False,
    tol: float = 1e-6,
) -> complex:
    """
    d/dx func at x from second-order differences at h0 and h0/2 plus one
    Richardson step.

    Central differences by default; ``one_sided`` uses the backward stencil
    (3 f(x) - 4 f(x-h) + f(x-2h)) / 2h, which never samples right of x.
    Raises :class:`StepTooLarge` if the extrapolated value and the h0/2
    difference disagree by more than ``tol * (1 + |result|)``.
    """
    if not h0 > 0.0:
        raise ValueError("h0 must be positive")
    if one_sided:
        f0 = func(x)

        def diff(h):
            return (3.0 * f0 - 4.0 * func(x - h) + func(x - 2.0 * h)) / (2.0 * h)
    else:
        def diff(h):
            return (func(x + h) - func(x - h)) / (2.0 * h)

    coarse = diff(h0)
    fine = diff(0.5 * h0)
    extrapolated = (4.0 * fine - coarse) / 3.0
    gap = abs(extrapolated - fine)
    if gap > tol * (1.0 + abs(extrapolated)):
        raise StepTooLarge(f"Richardson disagreement {gap:.3g} at x={x}, h0={h0}")
    return extrapolated


def dx_zeta_frac(p: FracCoordinatePoint, cfg: EvalConfig = DEFAULT_CONFIG, h0: float = 1e-3, *, tol: float = 1e-6) -> complex:
    """
    Partial derivative in x of zeta(s, x), x <= 0.

    Central stencil where x + h0 <= 0, backward stencil otherwise, so the
    domain boundary x = 0 is never crossed.
    """
    s = p.s
    prefactor_eta_to_zeta(s, cfg.pole_tol)

    def f(xx):
        return zeta_frac(FracCoordinatePoint(s, min(xx, 0.0)), cfg)

    return richardson_derivative(f, p.x, h0, one_sided=p.x + h0 > 0.0, tol=tol)


def theorem2_residual(s, x: float, cfg: EvalConfig = DEFAULT_CONFIG, h0: float = 1e-3) -> float:
    """
    |zeta(s, x) - (2^s - 1)/(2^s - 2) * d/dx zeta(s + 1, x)|.

    Analytically zero for Re s > 0, x <= 0, s off the prefactor poles.
    """
    s = as_complex(s)
    factor = prefactor_theorem2(s, cfg.pole_tol)
    lhs = zeta_frac(FracCoordinatePoint(s, x), cfg)
    rhs = factor * dx_zeta_frac(FracCoordinatePoint(s + 1.0, x), cfg, h0)
    return abs(lhs - rhs)
