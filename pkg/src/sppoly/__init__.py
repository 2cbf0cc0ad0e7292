"""Staircase palindromic polynomials over exact rational arithmetic.

Construct the staircase family S(x, n, h) and its alternating-sign,
missing-terms, and geometric variants; recognize members from raw
coefficients; factor them into cyclotomic polynomials; and enumerate their
roots of unity with exact labels, numeric residual checks, and Schur
stability reports. Everything is verified against brute-force expansion.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .cyclotomic import (
    CyclotomicCache,
    check_property_1,
    check_property_2,
    check_property_3,
    cyclotomic,
    divisors,
    primitive_residues,
    totient,
)
from .errors import (
    DivisionByZero,
    InternalError,
    InvalidHeight,
    InvalidScale,
    InvalidStretch,
    NotDivisible,
    ParseError,
    PreconditionViolated,
    SppolyError,
    UnverifiedFactorList,
)
from .polynomial import NEG_INFINITY, Polynomial, all_one, x_power_minus_one
from .roots import (
    RealRootReport,
    RootEntry,
    RootSet,
    StabilityReport,
    real_root_report,
    roots_of,
    schur_report,
)
from .staircase import (
    Factor,
    FactorList,
    Identity,
    NegateArg,
    PowerArg,
    ScaleArg,
    SpDescriptor,
    all_one_split,
    build_sp,
    classify_sp,
    factor_sp,
    max_height,
    sp_count,
    verify,
)
from .textio import format_factors, format_polynomial, parse_polynomial
from .variants import (
    AspDescriptor,
    GspDescriptor,
    MspDescriptor,
    build_asp,
    build_gsp,
    build_msp,
    classify_asp,
    classify_gsp,
    classify_msp,
    factor_asp,
    factor_gsp,
    factor_msp,
    normalize_asp_factors,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "NEG_INFINITY",
    "Polynomial",
    "all_one",
    "x_power_minus_one",
    "CyclotomicCache",
    "cyclotomic",
    "divisors",
    "primitive_residues",
    "totient",
    "check_property_1",
    "check_property_2",
    "check_property_3",
    "SpDescriptor",
    "Factor",
    "FactorList",
    "Identity",
    "NegateArg",
    "PowerArg",
    "ScaleArg",
    "build_sp",
    "classify_sp",
    "factor_sp",
    "all_one_split",
    "sp_count",
    "max_height",
    "verify",
    "AspDescriptor",
    "MspDescriptor",
    "GspDescriptor",
    "build_asp",
    "build_msp",
    "build_gsp",
    "classify_asp",
    "classify_msp",
    "classify_gsp",
    "factor_asp",
    "factor_msp",
    "factor_gsp",
    "normalize_asp_factors",
    "RootEntry",
    "RootSet",
    "RealRootReport",
    "StabilityReport",
    "roots_of",
    "real_root_report",
    "schur_report",
    "parse_polynomial",
    "format_polynomial",
    "format_factors",
    "SppolyError",
    "DivisionByZero",
    "NotDivisible",
    "InvalidHeight",
    "InvalidStretch",
    "InvalidScale",
    "PreconditionViolated",
    "UnverifiedFactorList",
    "ParseError",
    "InternalError",
]
