from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from deficiency.frobenius import (
    ResonanceError,
    eval_solution,
    hyp0f1_reference,
    indicial_root,
    ode_residual,
    series_solution,
    solution_grid,
)

from conftest import rationals

F = Fraction


def _rel(a, b):
    with mpmath.workprec(256):
        return abs(a - b) / abs(b)


def test_mu_zero_is_pure_power():
    s = series_solution(1, 2, 0, 2, K=6)
    assert all(a == 0 for a in s.coeffs[1:])
    assert eval_solution(s, 3) == 9
    assert ode_residual(s, 3) == 0


def test_half_power():
    # alpha = -1/2 is a root of z(z - 1) - 3/4
    s = series_solution(1, F(3, 4), 1, F(-1, 2), K=0)
    assert eval_solution(s, 4) == mpmath.mpf(1) / 2


def test_k0_residual_is_minus_mu_power():
    s = series_solution(2, 0, F(5, 3), 3, K=0)
    with mpmath.workprec(256):
        assert _rel(ode_residual(s, F(1, 2)), -mpmath.mpf(5) / 3 * mpmath.mpf(1) / 8) < 1e-60


def test_pochhammer_pattern_n1():
    # mu = -4, alpha = 1, c = 0: a_k = 1 / (k! (3/2)_k)
    s = series_solution(1, 0, -4, 1, K=8)
    with mpmath.workprec(256):
        for k, a in enumerate(s.coeffs):
            assert _rel(a, 1 / (mpmath.factorial(k) * mpmath.rf(mpmath.mpf(3) / 2, k))) < 1e-70


def test_0f3_pattern_n2():
    n, c, mu = 2, F(7), F(3, 2)
    alpha = indicial_root(n, c, 4)
    s = series_solution(n, c, mu, alpha, K=10)
    from deficiency.rootcount import numeric_roots

    roots = numeric_roots(n, c).alphas
    with mpmath.workprec(256):
        a4 = mpmath.mpc(alpha)
        bs = [1 + (a4 - r) / 4 for r in roots[:3]]
        for k, a in enumerate(s.coeffs):
            ref = (mpmath.mpf(3) / 2 / 256) ** k / (mpmath.factorial(k) * bs[0].__class__(1)
                                                     * mpmath.rf(bs[0], k) * mpmath.rf(bs[1], k) * mpmath.rf(bs[2], k))
            assert _rel(a, ref) < 1e-60


def test_spec_residual_example():
    s = series_solution(2, 7, 1, indicial_root(2, 7, 4), K=12)
    r = ode_residual(s, F(1, 10))
    assert _rel(r, s.tail(F(1, 10))) < 1e-20


@given(st.integers(1, 3), rationals(10**4, 50), rationals(100, 20), st.sampled_from([F(1, 10), F(1, 2), F(1)]),
       st.integers(1, 10))
@settings(max_examples=30, deadline=None)
def test_residual_is_tail(n, c, mu, x, K):
    assume(mu != 0)
    alpha = indicial_root(n, c, 2 * n)
    try:
        s = series_solution(n, c, mu, alpha, K=K)
    except ResonanceError:
        assume(False)
    assert _rel(ode_residual(s, x), s.tail(x)) < 1e-20


@given(rationals(10**3, 30), rationals(50, 10))
@settings(max_examples=20, deadline=None)
def test_n1_matches_0f1(c, mu):
    assume(c != F(-1, 4))
    try:
        s = series_solution(1, c, mu, indicial_root(1, c, 2), K=60)
    except ResonanceError:
        assume(False)
    x = F(1, 2)
    assert _rel(eval_solution(s, x), hyp0f1_reference(c, mu, x)) < 1e-20


def test_resonance_rejected():
    # roots 3/2 and -1/2 differ by 2 = 2n
    with pytest.raises(ResonanceError):
        series_solution(1, F(3, 4), 1, F(-1, 2), K=3)


def test_not_a_root_rejected():
    with pytest.raises(ValueError):
        series_solution(2, 7, 1, F(1, 3))


def test_square_integrable_leading_term():
    # Re alpha > -1/2 keeps |x^alpha|^2 integrable at 0
    for n, c in ((1, F(1, 2)), (2, 0)):
        from deficiency.rootcount import numeric_roots

        for z in numeric_roots(n, c).alphas:
            e = 2 * float(z.real)
            val = mpmath.quad(lambda t: t ** e, [mpmath.mpf(10) ** -12, 1])
            if float(z.real) > -0.5:
                assert val < 1 / (e + 1) + 1e-6
            else:
                assert val > 1e3


def test_grid_rows():
    s = series_solution(1, 0, 1, 1, K=20)
    rows = solution_grid(s, F(1, 10), 1, 4)
    assert [r[0] for r in rows] == ["1/10", "2/5", "7/10", "1"]
    assert abs(float(rows[-1][1]) - float(mpmath.sin(1))) < 1e-14
