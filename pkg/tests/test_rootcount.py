from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deficiency.indicial import build_indicial
from deficiency.rootcount import (
    DegenerateSignal,
    HalfPlaneCounts,
    count_halfplanes_exact,
    count_on_line,
    count_right,
    line_pair,
    numeric_roots,
)

from conftest import rationals

F = Fraction


@pytest.mark.parametrize("n, c, expected", [
    (1, 0, (2, 0, 0)),           # roots 0 and 1
    (1, 2, (1, 0, 1)),           # roots -1 and 2
    (1, F(-1, 4), (2, 0, 0)),    # double root 1/2
    (2, 0, (4, 0, 0)),
    (2, 100, (2, 0, 2)),
    (3, 200, (5, 0, 1)),
])
def test_exact_counts(n, c, expected):
    assert tuple(count_right(n, c, cross_check=True)) == expected


def test_degenerate_falls_back():
    assert isinstance(count_halfplanes_exact(2, 45), DegenerateSignal)
    assert count_right(2, 45) == HalfPlaneCounts(2, 2, 0)
    assert count_right(2, F(-105, 16)) == HalfPlaneCounts(3, 1, 0)


def test_count_on_line():
    assert count_on_line(2, 45) == 2
    assert count_on_line(2, F(-105, 16)) == 1
    assert count_on_line(1, F(3, 4)) == 1
    assert count_on_line(2, 0) == 0


def test_line_pair_parity():
    lp = line_pair(3, F(7, 2))
    assert all(a == 0 for a in lp.A.coeffs[1::2])
    assert all(b == 0 for b in lp.B.coeffs[0::2])


def test_double_roots_have_multiplicity():
    inv = numeric_roots(1, F(-1, 4))
    assert [(complex(z), m) for z, m in inv.roots] == [(0.5 + 0j, 2)]
    inv = numeric_roots(2, F(-9, 16))
    assert sum(m for _, m in inv.roots) == 4


def test_roots_against_mpmath_polyroots():
    n, c = 3, F(1234, 7)
    inv = numeric_roots(n, c)
    D = build_indicial(n).at(c)
    with mpmath.workprec(256):
        ref = mpmath.polyroots([mpmath.mpf(a.numerator) / a.denominator for a in reversed(D.coeffs)],
                               maxsteps=200, extraprec=256)
        ref = sorted(ref, key=lambda z: (float(z.real), float(z.imag)))
        for (z, _), r in zip(inv.roots, ref):
            assert abs(z - r) < mpmath.mpf(10) ** -50


@given(st.integers(1, 4), rationals(10**6, 30))
@settings(max_examples=40, deadline=None)
def test_routes_agree_and_sum(n, c):
    exact = count_right(n, c, cross_check=True)
    assert sum(exact) == 2 * n
    inv = numeric_roots(n, c)
    # conjugate symmetry
    with mpmath.workprec(inv.precision):
        for z, m in inv.roots:
            assert any(abs(w - mpmath.conj(z)) < mpmath.mpf(10) ** -40 and mw == m for w, mw in inv.roots)


def test_precision_guard():
    with pytest.raises(ValueError):
        numeric_roots(2, 1, precision=20)
