"""Exact deficiency-index computations for (-1)^n d^2n/dx^2n + c x^(-2n) on (0, d).

The number of square-integrable power solutions near 0 is read off from the
roots of the indicial polynomial D_2n(z; c) relative to Re z = -1/2; the
coupling values where that count jumps are real roots of an exact polynomial
h_{n-1}(c) (plus one explicit rational), and are carried as certified
isolating intervals.
"""
from .exact import QPolynomial, Rational, as_rational
from .indicial import InvariantViolation, build_indicial, birman_constant, q0_closed_form, shifted_coeffs
from .rootcount import HalfPlaneCounts, RootFindingError, count_halfplanes_exact, count_on_line, count_right, numeric_roots
from .hurwitz import build_hurwitz, hurwitz_matrix, orlando_check
from .thresholds import (
    band_table,
    classify,
    deficiency_indices,
    is_essentially_selfadjoint,
    selfadjoint_threshold,
    threshold_set,
)

__version__ = "0.1.0"

__all__ = [
    "QPolynomial", "Rational", "as_rational",
    "InvariantViolation", "build_indicial", "birman_constant", "q0_closed_form", "shifted_coeffs",
    "HalfPlaneCounts", "RootFindingError", "count_halfplanes_exact", "count_on_line", "count_right",
    "numeric_roots", "build_hurwitz", "hurwitz_matrix", "orlando_check",
    "band_table", "classify", "deficiency_indices", "is_essentially_selfadjoint",
    "selfadjoint_threshold", "threshold_set",
]
