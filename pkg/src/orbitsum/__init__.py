"""orbitsum: exact verification of orbit-sum multiplicity for x^2 + c.

The package computes Groebner bases and elimination ideals for the period
3/4/5 orbit systems of the quadratic family on the (u,v)-plane, and checks
the headline result (the period-5 orbit sum is at most three-valued) both
exactly and against an independent floating-point orbit oracle.
"""
from .errors import (
    BudgetExceededError,
    ConvergenceError,
    DataIntegrityError,
    DimensionError,
    InvariantViolationError,
    OrbitsumError,
    OrderError,
    ParseError,
    PoleError,
    UnknownVariableError,
    ZeroPolynomialError,
)
from .ring import (
    LEX,
    ExactScalar,
    MonomialOrder,
    MultiPoly,
    VarSet,
    divide_multi,
    exact_div,
    format_poly,
    parse_poly,
    poly_gcd,
)
from .groebner import (
    DEFAULT_PAIR_BUDGET,
    ExtensionReport,
    GroebnerResult,
    IdealBasis,
    PairStats,
    buchberger,
    certify,
    check_extends,
    eliminate,
    extension_report,
    normal_form,
    s_polynomial,
    sylvester_resultant,
    trial_factor,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError", "ConvergenceError", "DataIntegrityError",
    "DimensionError", "InvariantViolationError", "OrbitsumError",
    "OrderError", "ParseError", "PoleError", "UnknownVariableError",
    "ZeroPolynomialError",
    "LEX", "ExactScalar", "MonomialOrder", "MultiPoly", "VarSet",
    "divide_multi", "exact_div", "format_poly", "parse_poly", "poly_gcd",
    "DEFAULT_PAIR_BUDGET", "ExtensionReport", "GroebnerResult", "IdealBasis",
    "PairStats", "buchberger", "certify", "check_extends", "eliminate",
    "extension_report", "normal_form", "s_polynomial", "sylvester_resultant",
    "trial_factor",
    "__version__",
]
