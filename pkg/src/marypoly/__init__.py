"""M-ary partition polynomials p_M(n, t): exact computation and verification."""

from .errors import MaryPolyError, NoConvergence, NotDivisible, NotMonic
from .intpoly import IntPoly, divides, gcd_many, gcd_monic
from .mseq import MSeq, digit_sum, from_digits, to_digits, valuation
from .partitions import (
    a_series,
    b_count,
    coeff_a,
    oracle_series,
    p_poly,
    p_value,
    p_values,
    s_partitions,
)
from .roots import complex_roots, radius_bound, root_report, tilde_normalize
from .congruence import check_theorem, g_poly, quantum_check
from .mahler import dfao_lsd, dfao_msd, kernel, mahler_system, verify_mahler

__all__ = [
    "MaryPolyError", "NoConvergence", "NotDivisible", "NotMonic",
    "IntPoly", "divides", "gcd_many", "gcd_monic",
    "MSeq", "digit_sum", "from_digits", "to_digits", "valuation",
    "a_series", "b_count", "coeff_a", "oracle_series", "p_poly", "p_value",
    "p_values", "s_partitions",
    "complex_roots", "radius_bound", "root_report", "tilde_normalize",
    "check_theorem", "g_poly", "quantum_check",
    "dfao_lsd", "dfao_msd", "kernel", "mahler_system", "verify_mahler",
]
