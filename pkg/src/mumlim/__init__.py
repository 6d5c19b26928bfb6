"""Exact Frobenius bases, monodromy filtrations and period verification
for differential operators in theta form with a maximally unipotent
regular singularity at t=0."""

__version__ = "0.1.0"

from .backend import backend_name, available_backends
from .rationals import QQ, scalar_backend
from .poly import Poly
from .ratfunc import RationalFunction
from .series import TruncatedSeries
from .operators import (
    ThetaOperator,
    TPolyOperator,
    theta_to_tpoly,
    op_theta_derivative,
    apply_operator,
    legendre_picard_fuchs,
)
from .solver import (
    StandardBasis,
    LogSeries,
    check_mum,
    is_mum,
    indicial_polynomial,
    standard_basis,
    residual,
)
from .monodromy import (
    FormalScalar,
    TAU,
    monodromy_matrix,
    log_monodromy,
    exp_nilpotent,
    weight_filtration,
    limiting_hodge_filtration,
    Filtration,
    mhs_checks,
    MHSReport,
)
from .functionals import (
    SymbolM,
    DualVector,
    limit_functional,
    functional_at_z,
    twisted_functional_at_z,
)
from .neval import (
    EvalConfig,
    EvalResult,
    eval_phi,
    eval_phi_at_z,
    hypergeom_2f1_half,
    legendre_period_first,
    legendre_period_second,
    verify_identity_hg,
    pi_series,
)
from .parsing import parse_expression, print_expression, parse_operator, parse_symbol
from . import errors

__all__ = [
    "QQ",
    "Poly",
    "RationalFunction",
    "TruncatedSeries",
    "ThetaOperator",
    "TPolyOperator",
    "theta_to_tpoly",
    "op_theta_derivative",
    "apply_operator",
    "legendre_picard_fuchs",
    "StandardBasis",
    "LogSeries",
    "check_mum",
    "is_mum",
    "indicial_polynomial",
    "standard_basis",
    "residual",
    "FormalScalar",
    "TAU",
    "monodromy_matrix",
    "log_monodromy",
    "exp_nilpotent",
    "weight_filtration",
    "limiting_hodge_filtration",
    "Filtration",
    "mhs_checks",
    "MHSReport",
    "SymbolM",
    "DualVector",
    "limit_functional",
    "functional_at_z",
    "twisted_functional_at_z",
    "EvalConfig",
    "EvalResult",
    "eval_phi",
    "eval_phi_at_z",
    "hypergeom_2f1_half",
    "legendre_period_first",
    "legendre_period_second",
    "verify_identity_hg",
    "pi_series",
    "parse_expression",
    "print_expression",
    "parse_operator",
    "parse_symbol",
    "errors",
    "backend_name",
    "available_backends",
    "scalar_backend",
]
