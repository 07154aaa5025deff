"""
Series reference values for eta(s, y) and zeta(s), independent of quadrature.

Expanding the Fermi weight 1/(e^t + 1) = sum_{n>=1} (-1)^(n-1) e^(-n t) inside
the integral definition of the incomplete eta function and integrating term
by term (int_0^inf u^(s-1) e^(-n u) du = Gamma(s) n^(-s)) gives

    eta(s, y) = sum_{n>=1} (-1)^(n-1) e^(-n y) n^(-s),   Re s > 0, y >= 0,

which at y = 0 is the Dirichlet eta series itself.

Two summation routes, each with a certified truncation bound:

plain
    Partial sum to N.  For y > 0 the tail is below the geometric bound
    e^(-(N+1) y) / (1 - e^(-y)).  For y = 0 consecutive terms are paired,
    |n^-s - (n+1)^-s| <= |s| int_n^(n+1) t^(-sigma-1) dt, so with N even the
    tail is below |s| (N+1)^(-sigma) / sigma.

accelerated
    Cohen, Rodriguez Villegas and Zagier's alternating-series transform
    (their Algorithm 1, Chebyshev weights).  The terms are moments
    a_k = int_0^1 w^k dmu(w) of the complex measure
    dmu = tau^(s-1) w dtau / Gamma(s), w = exp(-(tau + y)), whose total
    variation (weighted by 1/(1+w)) is Gamma(sigma) eta(sigma, y) / |Gamma(s)|
    <= Gamma(sigma) e^(-y) / |Gamma(s)|.  The transform's error is at most
    2 (3 + sqrt 8)^(-n) times that, for every y >= 0.

Gamma enters only through the bound that picks n, never through the value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .complexfn import as_complex, log_gamma, prefactor_eta_to_zeta, DEFAULT_POLE_TOL
from .errors import DomainError, ToleranceUnreachable

MAX_PLAIN_TERMS = 10**7
MAX_ACCEL_TERMS = 10**3
_CVZ_RATE = math.log(3.0 + math.sqrt(8.0))
_CHUNK = 1 << 18


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    terms_used: int
    truncation_bound: float


def _check_args(s, y, tol):
    s = as_complex(s)
    y = float(y)
    if s.real <= 0.0:
        raise DomainError(f"eta_series requires Re(s) > 0, got {s!r}")
    if not (y >= 0.0 and math.isfinite(y)):
        raise DomainError(f"eta_series requires finite y >= 0, got {y!r}")
    if not tol >= 1e-14:
        raise ValueError("tol must be >= 1e-14")
    return s, y


def _cvz_log_mass(s: complex) -> float:
    """log of Gamma(sigma) / |Gamma(s)|."""
    return math.lgamma(s.real) - log_gamma(s).real


def cvz_terms_needed(s: complex, y: float, tol: float) -> int:
    """Smallest n with 2 (3+sqrt8)^-n Gamma(sigma) e^-y / |Gamma(s)| <= tol."""
    log_c = math.log(2.0) + _cvz_log_mass(s) - y
    return max(1, math.ceil((log_c - math.log(tol)) / _CVZ_RATE))


def _cvz_bound(s: complex, y: float, n: int) -> float:
    return math.exp(math.log(2.0) + _cvz_log_mass(s) - y - n * _CVZ_RATE)


def plain_terms_needed(s: complex, y: float, tol: float) -> int:
    if y > 0.0:
        # e^(-(N+1) y) / (1 - e^(-y)) <= tol
        n = (-math.log(tol) - math.log(-math.expm1(-y))) / y - 1.0
        return max(1, math.ceil(n))
    sigma = s.real
    # |s| (N+1)^(-sigma) / sigma <= tol, N even
    n = math.exp((math.log(abs(s) / (sigma * tol))) / sigma) - 1.0
    n = max(2, math.ceil(n)) if n < 1e300 else math.inf
    return n + (n % 2) if math.isfinite(n) else n


def _plain_bound(s: complex, y: float, n: int) -> float:
    if y > 0.0:
        return math.exp(-(n + 1) * y) / (-math.expm1(-y))
    return abs(s) * (n + 1) ** (-s.real) / s.real


@lru_cache(maxsize=128)
def cvz_weights(n: int) -> np.ndarray:
    """
    Weights w_k (0 <= k < n) with sum (-1)^k a_k ~= sum_k (-1)^k w_k a_k.

    Algorithm 1 of Cohen-Rodriguez Villegas-Zagier, rescaled by 1/d_n so
    nothing overflows: with b_k the rescaled Chebyshev recurrence,
    c_k = (-1)^k (1 - sum_{j<=k} |b_j|).
    """
    log_d = n * _CVZ_RATE + math.log1p(math.exp(-2.0 * n * _CVZ_RATE)) - math.log(2.0)
    log_b = -log_d
    acc = 0.0
    out = np.empty(n)
    for k in range(n):
        acc += math.exp(log_b)
        out[k] = 1.0 - acc
        log_b += math.log((n + k) * (n - k)) - math.log((k + 0.5) * (k + 1.0))
    out.setflags(write=False)
    return out


def _terms(s: complex, y, n_lo: int, n_hi: int) -> np.ndarray:
    """(-1)^(n-1) e^(-n y) n^(-s) for n_lo <= n < n_hi; rows follow y when y is an array."""
    n = np.arange(n_lo, n_hi, dtype=float)
    sign = np.where(n % 2 == 1, 1.0, -1.0)
    y = np.asarray(y, dtype=float)
    log_mag = -np.multiply.outer(y, n) if y.ndim else -y * n
    return sign * np.exp(log_mag - s * np.log(n))


def _plain_sum(s, y, n_terms):
    total = 0j
    for lo in range(1, n_terms + 1, _CHUNK):
        hi = min(n_terms + 1, lo + _CHUNK)
        total += complex(np.sum(_terms(s, y, lo, hi)))
    return total


def _accel_sum(s, y, n_terms):
    w = cvz_weights(n_terms)
    return _terms(s, y, 1, n_terms + 1) @ w


def eta_series(s, y: float = 0.0, tol: float = 1e-13, method: str = "auto") -> SeriesResult:
    """
    sum_{n>=1} (-1)^(n-1) e^(-n y) n^(-s) with a certified truncation bound.

    Parameters
    ----------
    s : complex
        Order, Re(s) > 0.
    y : float
        Shift, y >= 0.
    tol : float
        Requested bound on the truncation error (>= 1e-14).
    method : {"auto", "plain", "accelerated"}
        "auto" takes whichever route needs fewer terms.

    Raises
    ------
    ToleranceUnreachable
        If the chosen route needs more than 10**7 plain or 10**3
        accelerated terms.
    """
    s, y = _check_args(s, y, tol)
    if method not in ("auto", "plain", "accelerated"):
        raise ValueError(f"unknown method {method!r}")
    n_plain = plain_terms_needed(s, y, tol) if method != "accelerated" else math.inf
    n_accel = cvz_terms_needed(s, y, tol) if method != "plain" else math.inf
    use_plain = method == "plain" or (method == "auto" and n_plain <= n_accel)
    if use_plain:
        if n_plain > MAX_PLAIN_TERMS:
            raise ToleranceUnreachable(
                f"plain eta series at s={s}, y={y} needs {n_plain:.3g} terms (cap {MAX_PLAIN_TERMS})"
            )
        n_plain = int(n_plain)
        return SeriesResult(_plain_sum(s, y, n_plain), n_plain, _plain_bound(s, y, n_plain))
    if n_accel > MAX_ACCEL_TERMS:
        raise ToleranceUnreachable(
            f"accelerated eta series at s={s}, y={y} needs {n_accel} terms (cap {MAX_ACCEL_TERMS})"
        )
    return SeriesResult(complex(_accel_sum(s, y, n_accel)), n_accel, _cvz_bound(s, y, n_accel))


def eta_series_array(s, ys, tol: float = 1e-13) -> tuple[np.ndarray, float]:
    """
    Vectorized :func:`eta_series` over an array of shifts.

    Returns the values and the largest truncation bound used.
    """
    s = as_complex(s)
    ys = np.asarray(ys, dtype=float)
    if s.real <= 0.0:
        raise DomainError(f"eta_series requires Re(s) > 0, got {s!r}")
    if ys.size and not (np.all(ys >= 0.0) and np.all(np.isfinite(ys))):
        raise DomainError("eta_series requires finite y >= 0")
    if not tol >= 1e-14:
        raise ValueError("tol must be >= 1e-14")
    out = np.empty(ys.shape, dtype=complex)
    if ys.size == 0:
        return out, 0.0
    n_accel = cvz_terms_needed(s, 0.0, tol)
    if n_accel > MAX_ACCEL_TERMS:
        raise ToleranceUnreachable(f"accelerated eta series at s={s} needs {n_accel} terms")
    with np.errstate(divide="ignore"):
        n_plain = np.where(
            ys > 0.0,
            np.ceil((-math.log(tol) - np.log(-np.expm1(-np.where(ys > 0, ys, 1.0)))) / np.where(ys > 0, ys, 1.0) - 1.0),
            np.inf,
        )
    plain = n_plain <= n_accel
    bound = 0.0
    if np.any(plain):
        n = int(max(1, n_plain[plain].max()))
        out[plain] = _terms(s, ys[plain], 1, n + 1).sum(axis=-1)
        bound = max(bound, _plain_bound(s, float(ys[plain].min()), n))
    if np.any(~plain):
        out[~plain] = _accel_sum(s, ys[~plain], n_accel)
        bound = max(bound, _cvz_bound(s, 0.0, n_accel))
    return out, bound


def zeta_series(s, tol: float = 1e-13, pole_tol: float = DEFAULT_POLE_TOL) -> SeriesResult:
    """zeta(s) = eta(s) / (1 - 2^(1-s)) for Re s > 0 away from the prefactor poles."""
    s = as_complex(s)
    pref = prefactor_eta_to_zeta(s, pole_tol).value
    eta_tol = max(1e-14, tol / abs(pref))
    res = eta_series(s, 0.0, eta_tol)
    return SeriesResult(pref * res.value, res.terms_used, abs(pref) * res.truncation_bound)
