"""
Double-exponential quadrature for the two semi-infinite integrals used here:

    fermi_power_integral     int_0^inf u^(s-1) / (exp(x + u) + 1) du
    weighted_outer_integral  int_0^inf u^(alpha-1) g(u - x) du

Both integrands carry the algebraic endpoint factor u^(s-1).  The range is
cut at ``split_point``; the head [0, split] gets a tanh-sinh rule whose nodes
cluster at u = 0 (node positions are formed as distances from 0, so they
reach ~1e-300 without cancellation), and the tail [split, U] is covered by
tanh-sinh panels of bounded width.  The truncation point U is solved from an
analytic upper-incomplete-gamma tail bound, so the truncation error is
certified rather than guessed.

For |Im s| large the integral is tiny compared to its integrand
(|Gamma(s)| ~ exp(-pi |Im s| / 2)) and summing on the real axis loses every
significant digit.  ``fermi_power_integral`` therefore integrates along the
ray u = r exp(i theta), with theta turned towards the decay of u^(i Im s).
The Fermi weight has its poles at u = -x + i pi (2k + 1), on or left of the
imaginary axis for x >= 0, so any |theta| < pi/2 is reachable by Cauchy's
theorem and the exp(-Re u) decay survives on the ray.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy import special

from .complexfn import as_complex
from .errors import DomainError, EnvelopeViolation, NonConvergence

_EPS = np.finfo(float).eps

# t-ranges of the trapezoid sums; exp(-pi sinh 6.8) underflows, exp(-pi sinh 4) ~ 1e-37
_T_SINGULAR = 6.8
_T_REGULAR = 4.0
_PANEL_WIDTH = 4.0
_MIN_LEVEL = 3
_NOISE_FACTOR = 8.0

# Residual cancellation accepted on the rotated ray is about exp(_ROTATION_BUDGET).
_ROTATION_BUDGET = 4.0
_MIN_POLE_CLEARANCE = 0.1


@dataclass(frozen=True)
class EvalConfig:
    """Tolerances and refinement limits shared by every evaluation.

    ``pole_tol`` is the radius on |2**s - 2| inside which zeta prefactors
    raise :class:`~rlzeta.errors.PoleError`.  ``nested_compose`` makes
    semigroup compositions use quadrature for the inner integral instead of
    the series oracle.  ``rotate`` enables the complex integration ray.
    """

    abs_tol: float = 1e-11
    rel_tol: float = 1e-11
    max_level: int = 10
    split_point: float = 1.0
    tail_tol_fraction: float = 0.1
    pole_tol: float = 1e-12
    nested_compose: bool = False
    rotate: bool = True

    def __post_init__(self):
        if not (self.abs_tol >= 1e-15 and self.rel_tol >= 1e-15):
            raise ValueError("abs_tol and rel_tol must be >= 1e-15")
        if not (1 <= int(self.max_level) <= 12) or int(self.max_level) != self.max_level:
            raise ValueError("max_level must be an integer in [1, 12]")
        if not (self.split_point > 0 and math.isfinite(self.split_point)):
            raise ValueError("split_point must be a positive finite number")
        if not (0.0 < self.tail_tol_fraction < 1.0):
            raise ValueError("tail_tol_fraction must lie in (0, 1)")
        if not (self.pole_tol >= 0.0):
            raise ValueError("pole_tol must be >= 0")


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class QuadResult:
    value: complex
    err_estimate: float
    n_evals: int
    truncation_point: float


@lru_cache(maxsize=64)
def _standard_nodes(level: int, t_lo: float, t_hi: float):
    """Nodes new at ``level`` on [0, 1]: position q, complement 1 - q, weight dq/dt."""
    h = 2.0 ** -level
    k = np.arange(math.ceil(t_lo / h), math.floor(t_hi / h) + 1)
    if level > 0:
        k = k[k % 2 != 0]
    t = k * h
    v = np.pi * np.sinh(t)
    with np.errstate(over="ignore"):
        q = 1.0 / (1.0 + np.exp(-v))
        qc = 1.0 / (1.0 + np.exp(v))
        w = np.pi * np.cosh(t) * q * qc
    keep = (w > 0.0) & (q > 0.0) & (qc > 0.0)
    q, qc, w = q[keep], qc[keep], w[keep]
    for arr in (q, qc, w):
        arr.setflags(write=False)
    return q, qc, w


def _panels(split: float, upper: float):
    panels = [(0.0, split, -_T_SINGULAR, _T_REGULAR)]
    if upper > split:
        n = max(1, math.ceil((upper - split) / _PANEL_WIDTH))
        edges = np.linspace(split, upper, n + 1)
        edges[-1] = upper
        panels.extend((float(edges[i]), float(edges[i + 1]), -_T_REGULAR, _T_REGULAR) for i in range(n))
    return panels


def _head_min_node(split: float) -> float:
    q, _, _ = _standard_nodes(0, -_T_SINGULAR, _T_REGULAR)
    return split * float(q.min())


def _de_integrate(func, panels, abs_tol, rel_tol, max_level, extra_err=0.0, what="integral"):
    """Refine trapezoid sums on every panel together; return (value, err, n_evals)."""
    total = 0j
    l1 = 0.0
    n_evals = 0
    prev = None
    last_err = math.inf
    min_level = min(_MIN_LEVEL, max_level)
    for level in range(max_level + 1):
        h = 2.0 ** -level
        for a, b, t_lo, t_hi in panels:
            q, qc, w = _standard_nodes(level, t_lo, t_hi)
            length = b - a
            # near the right end, measure from b so the node never rounds onto it
            x = np.where(q <= 0.5, a + length * q, b - length * qc)
            vals = np.asarray(func(x), dtype=complex)
            ww = length * w
            total += complex(np.dot(vals, ww))
            l1 += float(np.dot(np.abs(vals), ww))
            n_evals += x.size
        value = total * h
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise NonConvergence(f"{what}: non-finite partial sum at level {level}")
        if prev is not None:
            noise = _NOISE_FACTOR * _EPS * l1 * h
            err = abs(value - prev) + noise + extra_err
            last_err = err
            if level >= min_level and err <= max(abs_tol, rel_tol * abs(value)):
                return value, err, n_evals
        prev = value
    raise NonConvergence(
        f"{what}: error estimate {last_err:.3g} above tolerance "
        f"{max(abs_tol, rel_tol * abs(prev)):.3g} after max_level={max_level}"
    )


def log_upper_gamma(a: float, z: float) -> float:
    """log Gamma(a, z) for real a > 0, z >= 0 (-inf on underflow)."""
    if z <= 0.0:
        return float(special.gammaln(a))
    with np.errstate(divide="ignore"):
        q = special.gammaincc(a, z)
        if q > 1e-280:
            return float(np.log(q) + special.gammaln(a))
    # asymptotic Gamma(a, z) <= z^(a-1) e^-z / (1 - (a-1)/z) once z > 2(a-1)
    if z > 2.0 * max(a - 1.0, 0.0):
        return (a - 1.0) * math.log(z) - z + math.log(2.0)
    return -math.inf


def _solve_truncation(log_bound: Callable[[float], float], target: float, start: float) -> float:
    """Smallest U >= start (to bisection accuracy) with log_bound(U) <= log(target)."""
    log_target = math.log(target)
    lo = start
    if log_bound(lo) <= log_target:
        return lo
    hi = 2.0 * lo
    while log_bound(hi) > log_target:
        lo, hi = hi, 2.0 * hi
        if hi > 1e8:
            raise NonConvergence("tail bound never drops below the tolerance")
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        if log_bound(mid) <= log_target:
            hi = mid
        else:
            lo = mid
        if hi - lo <= 1e-6 * hi:
            break
    return hi


def fermi_weight(z):
    """1 / (exp(z) + 1) evaluated without overflow, elementwise."""
    z = np.asarray(z)
    pos = z.real > 0
    with np.errstate(over="ignore", under="ignore"):
        e = np.exp(np.where(pos, -z, z))
        return np.where(pos, e / (1.0 + e), 1.0 / (1.0 + e))


def rotation_angle(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Angle of the integration ray for order ``s`` (0 means the real axis)."""
    t = s.imag
    if not cfg.rotate or abs(t) * (math.pi / 2) <= _ROTATION_BUDGET:
        return 0.0
    delta = max(_ROTATION_BUDGET / abs(t), _MIN_POLE_CLEARANCE)
    return math.copysign(math.pi / 2 - delta, t)


def fermi_power_integral(s, x: float, cfg: EvalConfig = DEFAULT_CONFIG, *, abs_tol: float | None = None) -> QuadResult:
    """
    int_0^inf u^(s-1) / (exp(x + u) + 1) du, i.e. Gamma(s) eta(s, x).

    ``abs_tol`` overrides ``cfg.abs_tol`` (callers that divide by Gamma(s)
    pass a tolerance scaled by |Gamma(s)|).

    The tail beyond U is bounded by exp(-x) Gamma(Re s, U) on the real axis
    and by 2 exp(-x) c^(-Re s) Gamma(Re s, c U), c = cos(theta), on a rotated
    ray; U is chosen so this is below ``tail_tol_fraction * abs_tol``.
    """
    s = as_complex(s)
    x = float(x)
    if s.real <= 0.0:
        raise DomainError(f"fermi_power_integral requires Re(s) > 0, got {s!r}")
    if not (x >= 0.0 and math.isfinite(x)):
        raise DomainError(f"fermi_power_integral requires finite x >= 0, got {x!r}")
    tol = cfg.abs_tol if abs_tol is None else float(abs_tol)
    if not tol > 0.0:
        raise ValueError("abs_tol must be positive")

    sigma = s.real
    theta = rotation_angle(s, cfg)
    # value = rot * J with J = int_0^inf r^(s-1) w(x + r e^(i theta)) dr
    log_scale = -s.imag * theta  # log |exp(i theta s)|
    rot = np.exp(1j * theta * s) if theta else 1.0 + 0j
    tol_j = tol * math.exp(-log_scale)
    c = math.cos(theta)
    k = 2.0 if theta else 1.0

    def log_tail(upper):
        return math.log(k) - x - sigma * math.log(c) + log_upper_gamma(sigma, c * upper)

    start = cfg.split_point
    if theta:
        start = max(start, (math.log(2.0) - x) / c)
    upper = _solve_truncation(log_tail, cfg.tail_tol_fraction * tol_j, start)
    tail = math.exp(log_tail(upper))
    head = _head_min_node(cfg.split_point) ** sigma / sigma

    ray = np.exp(1j * theta)
    sm1 = s - 1.0

    def integrand(r):
        return np.exp(sm1 * np.log(r)) * fermi_weight(x + r * ray)

    j, err_j, n = _de_integrate(
        integrand,
        _panels(cfg.split_point, upper),
        tol_j,
        cfg.rel_tol,
        cfg.max_level,
        extra_err=tail + head,
        what=f"fermi_power_integral(s={s}, x={x})",
    )
    scale = math.exp(log_scale)
    return QuadResult(complex(rot * j), err_j * scale, n, upper)


def weighted_outer_integral(
    alpha,
    x: float,
    inner: Callable[[np.ndarray], np.ndarray],
    cfg: EvalConfig = DEFAULT_CONFIG,
    *,
    envelope: tuple[float, float] = (1.0, 1.0),
    abs_tol: float | None = None,
) -> QuadResult:
    """
    int_0^inf u^(alpha-1) inner(u - x) du for x <= 0.

    ``inner`` is called with a float array of arguments y = u - x >= -x and
    must return the matching complex array.  ``envelope = (rate, const)``
    declares |inner(y)| <= const * exp(-rate * y); it sets the truncation
    point and every sample is checked against it.
    """
    alpha = as_complex(alpha, "alpha")
    x = float(x)
    if alpha.real <= 0.0:
        raise DomainError(f"weighted_outer_integral requires Re(alpha) > 0, got {alpha!r}")
    if not (x <= 0.0 and math.isfinite(x)):
        raise DomainError(f"weighted_outer_integral requires finite x <= 0, got {x!r}")
    rate, const = map(float, envelope)
    if not (rate > 0.0 and const > 0.0):
        raise ValueError("envelope rate and constant must be positive")
    tol = cfg.abs_tol if abs_tol is None else float(abs_tol)
    sigma = alpha.real

    def log_tail(upper):
        return math.log(const) + rate * x - sigma * math.log(rate) + log_upper_gamma(sigma, rate * upper)

    upper = _solve_truncation(log_tail, cfg.tail_tol_fraction * tol, cfg.split_point)
    tail = math.exp(log_tail(upper))
    head = const * math.exp(rate * x) * _head_min_node(cfg.split_point) ** sigma / sigma
    am1 = alpha - 1.0

    def integrand(u):
        y = u - x
        g = np.asarray(inner(y), dtype=complex)
        bound = const * np.exp(-rate * y)
        bad = np.abs(g) > bound * (1.0 + 1e-9) + 1e-300
        if np.any(bad):
            i = int(np.argmax(bad))
            raise EnvelopeViolation(
                f"|inner({y[i]!r})| = {abs(g[i]):.6g} exceeds envelope {bound[i]:.6g}"
            )
        return np.exp(am1 * np.log(u)) * g

    value, err, n = _de_integrate(
        integrand,
        _panels(cfg.split_point, upper),
        tol,
        cfg.rel_tol,
        cfg.max_level,
        extra_err=tail + head,
        what=f"weighted_outer_integral(alpha={alpha}, x={x})",
    )
    return QuadResult(value, err, n, upper)


def integrate_interval(
    func: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> QuadResult:
    """Tanh-sinh integral of a vectorized ``func`` over the finite interval [a, b]."""
    a, b = float(a), float(b)
    if not (math.isfinite(a) and math.isfinite(b) and b > a):
        raise DomainError(f"integrate_interval needs finite a < b, got [{a}, {b}]")
    value, err, n = _de_integrate(
        func, [(a, b, -_T_SINGULAR, _T_SINGULAR)], cfg.abs_tol, cfg.rel_tol, cfg.max_level
    )
    return QuadResult(value, err, n, b)
