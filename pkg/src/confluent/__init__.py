"""Confluent hypergeometric series, semiconvergent brackets, and a verified
catalog of definite-integral identities with an independent quadrature oracle.
"""

from .core import (
    DEFAULT_CONTROL,
    EvalResult,
    SeriesControl,
    log_pi_abs,
    pi_fn,
    pi_ratio,
    reciprocal_pi,
)
from .series import (
    ChiBracket,
    ChiPartialSums,
    CoeffSeq,
    PhiParams,
    chi_eval_optimal,
    chi_partial,
    coeff_recurrence,
    gauss_2f1_at_1,
    kummer_2f1_at_minus1,
    phi,
    psi,
)
from .transforms import (
    chi_via_phi,
    kummer_first,
    phi_2a_as_psi,
    psi_as_phi,
    stable_phi,
)
from .catalog import (
    ADOPTED_VARIANTS,
    IntegralSpec,
    lhs_spec,
    registry,
    rhs_eval,
)
from .quadrature import (
    QuadResult,
    integrate_semi_infinite,
    integrate_tan_oscillatory,
)
from .verify import (
    BracketCheck,
    GridSpec,
    IdentityReport,
    check_bracket,
    ode_residual_eq9,
    ode_residual_eq21,
    ode_residual_eq35,
    resolve_variants,
    run_identity_grid,
)

__version__ = "0.1.0"

__all__ = [
    "ADOPTED_VARIANTS",
    "BracketCheck",
    "ChiBracket",
    "ChiPartialSums",
    "CoeffSeq",
    "DEFAULT_CONTROL",
    "EvalResult",
    "GridSpec",
    "IdentityReport",
    "IntegralSpec",
    "PhiParams",
    "QuadResult",
    "SeriesControl",
    "check_bracket",
    "chi_eval_optimal",
    "chi_partial",
    "chi_via_phi",
    "coeff_recurrence",
    "gauss_2f1_at_1",
    "integrate_semi_infinite",
    "integrate_tan_oscillatory",
    "kummer_2f1_at_minus1",
    "kummer_first",
    "lhs_spec",
    "log_pi_abs",
    "ode_residual_eq9",
    "ode_residual_eq21",
    "ode_residual_eq35",
    "phi",
    "phi_2a_as_psi",
    "pi_fn",
    "pi_ratio",
    "psi",
    "psi_as_phi",
    "reciprocal_pi",
    "registry",
    "resolve_variants",
    "rhs_eval",
    "run_identity_grid",
    "stable_phi",
]
