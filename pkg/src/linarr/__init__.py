"""Exact freeness tests for affine line arrangements.

The package decides freeness of an affine line arrangement over Q,
Q(sqrt d), or F_p by computing the multiarrangement exponents of a
Ziegler restriction with exact arithmetic, and cross-checks that exact
verdict against a family of purely combinatorial criteria built from
characteristic polynomial roots and incidence counts.
"""

from .arrangement import (
    COMPLEX_CONJUGATE,
    REAL_IRRATIONAL,
    TWO_INTEGER,
    Arrangement,
    CharPoly,
    Line,
    RootPair,
    format_arrangement,
    line_through,
    load_arrangement,
    normalize_direction,
    normalize_line,
    parse_arrangement,
)
from .derivations import (
    AT_INFINITY,
    Exponents,
    HomDerivation,
    Multiarrangement,
    euler_witness,
    exponents,
    format_multiarrangement,
    graded_kernel,
    graded_kernel_dim,
    is_member,
    load_multiarrangement,
    parse_multiarrangement,
    saito_verify,
    ziegler_restriction,
)
from .errors import (
    InvariantViolation,
    LinarrError,
    MembershipError,
    ParseError,
    PreconditionError,
)
from .exactalg import ExactMatrix, Field, Mod, Quad, kernel_basis, rank
from .freeness import (
    FREE,
    NO_CONCLUSION,
    NOT_FREE,
    CriterionEntry,
    CriterionReport,
    FreenessCertificate,
    RootWindowReport,
    addition,
    bracketing_sub,
    decide_free,
    deletion_pair,
    external_candidates,
    intermediate_search,
    root_gap,
    root_incidence,
    run_criteria,
    small_exponent_sub,
    subfree,
    verify_root_window,
)

__version__ = "0.1.0"

__all__ = [
    "AT_INFINITY",
    "Arrangement",
    "COMPLEX_CONJUGATE",
    "CharPoly",
    "CriterionEntry",
    "CriterionReport",
    "ExactMatrix",
    "Exponents",
    "FREE",
    "Field",
    "FreenessCertificate",
    "HomDerivation",
    "InvariantViolation",
    "Line",
    "LinarrError",
    "MembershipError",
    "Mod",
    "Multiarrangement",
    "NOT_FREE",
    "NO_CONCLUSION",
    "ParseError",
    "PreconditionError",
    "Quad",
    "REAL_IRRATIONAL",
    "RootPair",
    "RootWindowReport",
    "TWO_INTEGER",
    "addition",
    "bracketing_sub",
    "decide_free",
    "deletion_pair",
    "euler_witness",
    "exponents",
    "external_candidates",
    "format_arrangement",
    "format_multiarrangement",
    "graded_kernel",
    "graded_kernel_dim",
    "intermediate_search",
    "is_member",
    "kernel_basis",
    "line_through",
    "load_arrangement",
    "load_multiarrangement",
    "normalize_direction",
    "normalize_line",
    "parse_arrangement",
    "parse_multiarrangement",
    "rank",
    "root_gap",
    "root_incidence",
    "run_criteria",
    "saito_verify",
    "small_exponent_sub",
    "subfree",
    "verify_root_window",
    "ziegler_restriction",
]
