"""Incomplete Dirichlet eta and Riemann zeta functions as Riemann-Liouville fractional integrals."""

__version__ = "0.1.0"

from .complexfn import (  # noqa: E402
    PrefactorValue,
    gamma,
    log_gamma,
    pow_realbase,
    prefactor_eta_to_zeta,
    prefactor_theorem2,
)
from .errors import (  # noqa: E402
    DomainError,
    EnvelopeViolation,
    NonConvergence,
    PoleError,
    StepTooLarge,
    ToleranceUnreachable,
)
from .fraczeta import (  # noqa: E402
    EtaCoordinatePoint,
    FracCoordinatePoint,
    dx_zeta_frac,
    eta_incomplete,
    frac_compose,
    frac_integral,
    theorem2_residual,
    zeta_complete,
    zeta_frac,
    zeta_incomplete,
)
from .oracle import SeriesResult, eta_series, zeta_series  # noqa: E402
from .quadrature import DEFAULT_CONFIG, EvalConfig, QuadResult, fermi_power_integral, weighted_outer_integral  # noqa: E402
from .checks import CheckReport, lemma3_bound_check, norm_X1  # noqa: E402

__all__ = [
    "__version__",
    "PrefactorValue",
    "gamma",
    "log_gamma",
    "pow_realbase",
    "prefactor_eta_to_zeta",
    "prefactor_theorem2",
    "DomainError",
    "EnvelopeViolation",
    "NonConvergence",
    "PoleError",
    "StepTooLarge",
    "ToleranceUnreachable",
    "EtaCoordinatePoint",
    "FracCoordinatePoint",
    "dx_zeta_frac",
    "eta_incomplete",
    "frac_compose",
    "frac_integral",
    "theorem2_residual",
    "zeta_complete",
    "zeta_frac",
    "zeta_incomplete",
    "SeriesResult",
    "eta_series",
    "zeta_series",
    "DEFAULT_CONFIG",
    "EvalConfig",
    "QuadResult",
    "fermi_power_integral",
    "weighted_outer_integral",
    "CheckReport",
    "lemma3_bound_check",
    "norm_X1",
]
