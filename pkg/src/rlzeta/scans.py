"""Exploratory sweeps: minima of |zeta| on a vertical line, and pairwise zeta(s, x) comparisons."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .fraczeta import FracCoordinatePoint, zeta_complete, zeta_frac
from .quadrature import DEFAULT_CONFIG, EvalConfig

ZERO_LEVEL = 1e-6


@dataclass(frozen=True)
class ScanMinimum:
    t: float
    abs_zeta: float

    @property
    def is_zero(self) -> bool:
        return self.abs_zeta < ZERO_LEVEL


def zero_scan(t_min: float, t_max: float, step: float, cfg: EvalConfig = DEFAULT_CONFIG, sigma: float = 0.5):
    """
    Local minima of |zeta(sigma + i t)| on [t_min, t_max].

    |zeta| is sampled every ``step``; each interior grid minimum brackets a
    golden-section search.  Returns a list of :class:`ScanMinimum`, empty if
    nothing is bracketed.
    """
    if not (0.0 < step < t_max - t_min):
        raise ValueError(f"need 0 < step < t_max - t_min, got step={step}, range=[{t_min}, {t_max}]")
    n = int(np.floor((t_max - t_min) / step + 1e-9)) + 1
    ts = t_min + step * np.arange(n)

    def f(t):
        return abs(zeta_complete(complex(sigma, t), cfg))

    vals = [f(t) for t in ts]
    found = []
    for i in range(1, n - 1):
        if vals[i] < vals[i - 1] and vals[i] <= vals[i + 1]:
            res = minimize_scalar(
                f, bracket=(ts[i - 1], ts[i], ts[i + 1]), method="golden", options={"xtol": 1e-11}
            )
            found.append(ScanMinimum(float(res.x), float(res.fun)))
    return found


def symmetry_scan(s1, s2, xs, cfg: EvalConfig = DEFAULT_CONFIG):
    """
    Compare zeta(s1, x) and zeta(s2, x) over x <= 0.

    Returns ``(max_deviation, rows)`` with rows ``(x, zeta1, zeta2, |zeta1 - zeta2|)``.
    Purely descriptive; nothing is asserted about the outcome.
    """
    rows = []
    for x in xs:
        z1 = zeta_frac(FracCoordinatePoint(s1, x), cfg)
        z2 = zeta_frac(FracCoordinatePoint(s2, x), cfg)
        rows.append((float(x), z1, z2, abs(z1 - z2)))
    return (max(r[3] for r in rows) if rows else 0.0), rows
