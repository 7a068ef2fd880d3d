"""Exact arithmetic for the height-2 Morava E-theory coefficient ring at
p = 3 and the power operations psi3, eta, their composite, alpha and delta.

The coefficient ring is Z9[[h]] worked modulo (3^N, h^M); every operation
is exact modulo that ideal, with effective 3-adic precision tracked through
the one lossy step (exact division by 3).  The hot kernels run through a
compiled extension when it is built, with a pure-Python fallback selected
at import (see morava3.backend).
"""

from .errors import (
    AlgebraMismatch,
    BadBranch,
    CrossCheckFailed,
    DimensionMismatch,
    NoConvergence,
    NotAUnit,
    NotDivisibleBy3,
    ParseError,
    RingError,
)
from .galois import DEFAULT_PROFILE, PRIME, GaloisInt, PrecisionProfile
from .series import DeformationElement, certify_nilpotent, make_c, substitute
from .matrices import MatrixE0, MonicPoly, build_a, build_b, companion, poly_at_matrix
from .algebras import AlgebraElement, MonogenicAlgebra, define_f, define_w
from .powerops import (
    READING_H_SQUARED,
    READING_LITERAL_CUBIC,
    PowerOpContext,
    build_composite_h,
    build_eta_a,
    build_psi3_h,
)
from .verification import CheckResult, VerificationReport, verify_report
from .expr import eval_expr, parse_element

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "AlgebraMismatch",
    "BadBranch",
    "CheckResult",
    "CrossCheckFailed",
    "DEFAULT_PROFILE",
    "DeformationElement",
    "DimensionMismatch",
    "GaloisInt",
    "MatrixE0",
    "MonicPoly",
    "MonogenicAlgebra",
    "NoConvergence",
    "NotAUnit",
    "NotDivisibleBy3",
    "PRIME",
    "ParseError",
    "PowerOpContext",
    "PrecisionProfile",
    "READING_H_SQUARED",
    "READING_LITERAL_CUBIC",
    "RingError",
    "VerificationReport",
    "build_a",
    "build_b",
    "build_composite_h",
    "build_eta_a",
    "build_psi3_h",
    "certify_nilpotent",
    "companion",
    "define_f",
    "define_w",
    "eval_expr",
    "make_c",
    "parse_element",
    "poly_at_matrix",
    "substitute",
    "verify_report",
]
