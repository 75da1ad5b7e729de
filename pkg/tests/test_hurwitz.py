from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from deficiency.exact import QPolynomial
from deficiency.hurwitz import build_hurwitz, h_poly_leading_law, hurwitz_matrix, orlando_check
from deficiency.indicial import q0_closed_form

from conftest import rationals

F = Fraction


def test_h1_root_is_45():
    h = build_hurwitz(2).h_poly
    assert h == QPolynomial([2880, -64])
    assert -h[0] / h[1] == 45


def test_h2_exact():
    assert build_hurwitz(3).h_poly == QPolynomial([146313216000, 207083520, -5832])


@pytest.mark.parametrize("n", range(2, 9))
def test_leading_law_and_factorization(n):
    fam = build_hurwitz(n)
    assert fam.h_poly.leading == h_poly_leading_law(n)
    assert fam.det == fam.linear_factor * fam.h_poly * fam.det_sign
    # the linear factor vanishes at (-1)^(n-1) q0
    assert fam.linear_factor((-1) ** (n - 1) * q0_closed_form(n)) == 0


def test_det_matches_sympy_n3():
    c = sympy.Symbol("c")
    m = hurwitz_matrix(3)
    rows = [[sum(sympy.Rational(a.numerator, a.denominator) * c**k for k, a in enumerate(m[i, j].coeffs))
             for j in range(m.cols)] for i in range(m.rows)]
    ref = sympy.Poly(sympy.Matrix(rows).det(method="berkowitz"), c)
    ours = build_hurwitz(3).det
    assert [sympy.Rational(a.numerator, a.denominator) for a in reversed(ours.coeffs)] == ref.all_coeffs()


def test_orlando_exact_at_zero():
    assert build_hurwitz(3).h_poly(0) == 146313216000
    assert orlando_check(3, 0) < 1e-60


@given(st.integers(2, 4), rationals(10**5, 20))
@settings(max_examples=15, deadline=None)
def test_orlando_identity(n, c):
    assert orlando_check(n, c) < 1e-40
