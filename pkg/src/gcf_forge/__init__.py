"""Exact verification of polynomial generalized continued fraction conjectures.

The pipeline: parse the coefficient polynomials and the target constant,
compute exact convergents of the three-term recurrence, factor it into a
first-order cascade via a coupling (c, d), map the continued fraction to
the reciprocal of a series, certify convergence with the exact term-ratio
limit, sum to the requested precision, and compare against the target.
"""

from .errors import (
    BoundaryRuleViolation,
    DivisionByZero,
    ExprSyntaxError,
    GcfForgeError,
    InsufficientPrecision,
    InvalidProblem,
    NegativeSqrt,
    NonPolynomial,
    NotConvergent,
    OutOfDomain,
    ProblemFileError,
    UnknownSymbol,
    ZeroDenominatorConvergent,
    ZeroDenominatorFactor,
    ZeroPartialNumerator,
    ZeroPolynomial,
)
from .expr import (
    ConstExpr,
    const_expr_to_text,
    eval_const_expr,
    parse_const_expr,
    parse_polynomial,
    parse_rational,
)
from .factorize import Coupling, find_couplings, verify_coupling
from .gcf import ConvergentTriple, GcfProblem, casoratian, convergents
from .numerics import (
    PrecisionReal,
    agree_to_digits,
    central_binomial,
    rational_to_real,
    working_precision,
)
from .poly import FactoredPolynomial, Polynomial, factor_rational
from .series import (
    RatioCertificate,
    TermStream,
    central_binomial_sum,
    partial_sums,
    ratio_certificate,
    sum_to_precision,
    terms,
)
from .verify import (
    AuxiliaryTrace,
    VerificationReport,
    auxiliary_trace,
    check_boundary_selection,
    check_numerator_product,
    check_reciprocal_identity,
    pincherle_evidence,
    verify_conjecture,
)

__version__ = "0.1.0"

__all__ = [
    "AuxiliaryTrace",
    "BoundaryRuleViolation",
    "ConstExpr",
    "ConvergentTriple",
    "Coupling",
    "DivisionByZero",
    "ExprSyntaxError",
    "FactoredPolynomial",
    "GcfForgeError",
    "GcfProblem",
    "InsufficientPrecision",
    "InvalidProblem",
    "NegativeSqrt",
    "NonPolynomial",
    "NotConvergent",
    "OutOfDomain",
    "Polynomial",
    "PrecisionReal",
    "ProblemFileError",
    "RatioCertificate",
    "TermStream",
    "UnknownSymbol",
    "VerificationReport",
    "ZeroDenominatorConvergent",
    "ZeroDenominatorFactor",
    "ZeroPartialNumerator",
    "ZeroPolynomial",
    "agree_to_digits",
    "auxiliary_trace",
    "casoratian",
    "central_binomial",
    "central_binomial_sum",
    "check_boundary_selection",
    "check_numerator_product",
    "check_reciprocal_identity",
    "const_expr_to_text",
    "convergents",
    "eval_const_expr",
    "factor_rational",
    "find_couplings",
    "parse_const_expr",
    "parse_polynomial",
    "parse_rational",
    "partial_sums",
    "pincherle_evidence",
    "ratio_certificate",
    "rational_to_real",
    "sum_to_precision",
    "terms",
    "verify_conjecture",
    "verify_coupling",
    "working_precision",
]
