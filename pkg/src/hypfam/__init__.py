"""Special functions and inclusion structure of a two-parameter family of
normalized holomorphic function classes.

The family assigns to each (s, t) in [0, inf] x [0, 1) the set of
holomorphic f on the unit disk with f(0) = f'(0) - 1 = 0 and
Re[(s-1) f(z)/z + f'(z)] >= s t.  Everything computable about its
inclusion order reduces to the zero-balanced hypergeometric value
2F1(1, s; s+1; -1) and the derived functions xi0..xi3, which this package
evaluates and feeds into curve tracing, order decisions, filtration
checking, quasi-extrema and verification suites.
"""

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import ConvergenceError, DomainError
from .quadrature import (
    Bracket,
    bracket,
    contour_log_residue,
    find_root,
    integrate,
    power_weight_integral,
)
from .special import (
    LN2,
    F,
    g,
    hyp2f1_1s,
    phi_poly,
    psi1,
    psi1_prime,
    psi2,
    psi2_prime,
    xi0,
    xi0_prime,
    xi1,
    xi2,
    xi3,
)
from .curves import (
    CurveKind,
    CurveSamples,
    ParamPoint,
    s_star,
    sample_curve,
    t_backward,
    t_forward,
    t_sharp,
)
from .order import (
    ORDER_TOL,
    FiltrationReport,
    FiltrationViolation,
    InclusionResult,
    QuasiExtremaResult,
    Relation,
    filtration_check,
    includes,
    quasi_extrema,
)
from .verify import (
    Check,
    RootCountReport,
    VerificationReport,
    appendix_pipeline,
    boundary_growth_integral,
    curve_order_suite,
    default_grid,
    witness_boundary,
    xi_theorem_suite,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CONFIG",
    "EvalConfig",
    "ConvergenceError",
    "DomainError",
    "Bracket",
    "bracket",
    "contour_log_residue",
    "find_root",
    "integrate",
    "power_weight_integral",
    "LN2",
    "F",
    "g",
    "hyp2f1_1s",
    "phi_poly",
    "psi1",
    "psi1_prime",
    "psi2",
    "psi2_prime",
    "xi0",
    "xi0_prime",
    "xi1",
    "xi2",
    "xi3",
    "CurveKind",
    "CurveSamples",
    "ParamPoint",
    "s_star",
    "sample_curve",
    "t_backward",
    "t_forward",
    "t_sharp",
    "ORDER_TOL",
    "FiltrationReport",
    "FiltrationViolation",
    "InclusionResult",
    "QuasiExtremaResult",
    "Relation",
    "filtration_check",
    "includes",
    "quasi_extrema",
    "Check",
    "RootCountReport",
    "VerificationReport",
    "appendix_pipeline",
    "boundary_growth_integral",
    "curve_order_suite",
    "default_grid",
    "witness_boundary",
    "xi_theorem_suite",
]
