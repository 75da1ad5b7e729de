"""Hurwitz matrix of the shifted indicial polynomial and its determinant in c."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import mpmath

from .exact import QPolyMatrix, QPolynomial, as_rational, bareiss_det, InexactDivisionError
from .indicial import InvariantViolation, _check_order, build_indicial, q0_closed_form, shifted_coeffs


@dataclass(frozen=True)
class HurwitzFamily:
    """H_2n(c) with entries in Q[c], together with its factored determinant.

    ``det == det_sign * linear_factor * h_poly`` where ``det_sign = (-1)^n``;
    ``h_poly`` is normalized so that it equals the pairwise-sum product of the
    shifted roots (Orlando's formula with constant 1).
    """

    n: int
    matrix: QPolyMatrix
    det: QPolynomial
    h_poly: QPolynomial
    linear_factor: QPolynomial

    @property
    def det_sign(self) -> int:
        return -1 if self.n % 2 else 1


def hurwitz_matrix(n: int) -> QPolyMatrix:
    """2n x 2n Hurwitz matrix, entry (i, j) = a_{2j-i} (1-based).

    With D_2n(z - 1/2; c) = a_0 z^2n + a_1 z^(2n-1) + ... + a_2n, the first row
    reads q_{2n-1}, q_{2n-3}, ... and c sits only in a_2n = q_0 + (-1)^n c.
    """
    fam = build_indicial(_check_order(n))
    sc = shifted_coeffs(fam)
    N = 2 * n
    zero = QPolynomial()
    a = [QPolynomial([sc.q[N - k]]) for k in range(N)] + [QPolynomial([sc.q[0], sc.sign])]

    def entry(k):
        return a[k] if 0 <= k <= N else zero

    return QPolyMatrix.from_rows([[entry(2 * j - i) for j in range(1, N + 1)] for i in range(1, N + 1)])


@lru_cache(maxsize=None)
def build_hurwitz(n: int) -> HurwitzFamily:
    n = _check_order(n)
    m = hurwitz_matrix(n)
    det = bareiss_det(m)
    lf = QPolynomial([q0_closed_form(n), -1 if n % 2 else 1])
    try:
        quotient = det.exact_div(lf)
    except InexactDivisionError as exc:
        raise InvariantViolation(f"det H_{2 * n} is not divisible by q0 + (-1)^n c") from exc
    h = quotient if n % 2 == 0 else -quotient
    if h.degree != n - 1:
        raise InvariantViolation(f"h_{n - 1} has degree {h.degree}")
    return HurwitzFamily(n=n, matrix=m, det=det, h_poly=h, linear_factor=lf)


def h_poly_leading_law(n: int) -> int:
    """(-1)^floor(n/2) (2n^2)^n, the expected leading coefficient of h_{n-1}."""
    return (-1) ** (n // 2) * (2 * n * n) ** n


def orlando_product(n: int, c, precision: int = 256):
    """prod over pairs j1 < j2 of (alpha_j1 + 1/2) + (alpha_j2 + 1/2), from numeric roots."""
    from .rootcount import numeric_roots

    inv = numeric_roots(n, c, precision)
    with mpmath.workprec(precision):
        shifted = []
        for z, mult in inv.roots:
            shifted.extend([z + mpmath.mpf(0.5)] * mult)
        prod = mpmath.mpc(1)
        for u, v in combinations(shifted, 2):
            prod *= u + v
        return prod


def orlando_check(n: int, c, precision: int = 256):
    """|orlando_product - h(c)| / max(1, |h(c)|)."""
    c = as_rational(c)
    h = build_hurwitz(n).h_poly(c)
    prod = orlando_product(n, c, precision)
    with mpmath.workprec(precision):
        hv = mpmath.mpf(h.numerator) / h.denominator
        return abs(prod - hv) / max(mpmath.mpf(1), abs(hv))
