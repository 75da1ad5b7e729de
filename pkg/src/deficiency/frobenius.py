"""Power-series solutions of (-1)^n y^(2n) + c x^(-2n) y = mu y near x = 0.

Substituting y = sum_k a_k x^(alpha + 2nk) gives the one-step recurrence

    a_k = (-1)^n mu a_{k-1} / D_2n(alpha + 2nk; c),   a_0 = 1,

valid as long as no other indicial root sits at alpha + 2nk (the resonant,
logarithmic case, which is rejected here).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .exact import as_rational, rational_str, squarefree_part
from .indicial import _check_order, build_indicial

DEFAULT_TERMS = 32
DEFAULT_PRECISION = 256


class ResonanceError(ValueError):
    """alpha + 2nk is (numerically) another indicial root; logarithmic case."""


def _mpq(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


@dataclass(frozen=True)
class SeriesSolution:
    n: int
    c: Fraction
    mu: Fraction
    alpha: object  # mpc, or Fraction when the root is rational
    coeffs: tuple  # mpc a_0..a_K
    precision: int

    @property
    def K(self) -> int:
        return len(self.coeffs) - 1

    def tail(self, x):
        """The closed-form residual -mu a_K x^(alpha + 2nK)."""
        with mpmath.workprec(self.precision):
            x = _to_mp(x)
            return -_mpq(self.mu) * self.coeffs[-1] * _power(x, _alpha_mp(self.alpha) + 2 * self.n * self.K)


def _to_mp(x):
    if isinstance(x, (int, Fraction, str)):
        return _mpq(as_rational(x))
    return mpmath.mpf(x)


def _alpha_mp(alpha):
    if isinstance(alpha, Fraction):
        return mpmath.mpc(_mpq(alpha))
    return mpmath.mpc(alpha)


def _power(x, e):
    # principal branch, x > 0; integer exponents stay exact
    e = mpmath.mpc(e)
    if e.imag == 0:
        if e.real == int(e.real):
            return mpmath.mpc(x ** int(e.real))
        return mpmath.mpc(mpmath.power(x, e.real))
    return mpmath.exp(e * mpmath.log(x))


def _falling(beta, m: int):
    """beta (beta - 1) ... (beta - m + 1)."""
    acc = mpmath.mpc(1)
    for j in range(m):
        acc *= beta - j
    return acc


def _polish_root(n: int, c: Fraction, alpha, precision: int):
    """Newton-refine alpha on D_2n(.; c) at ``precision`` bits."""
    if isinstance(alpha, Fraction):
        return alpha
    # polish on the square-free part so Newton stays quadratic at repeated roots
    P = squarefree_part(build_indicial(n).at(c))
    dP = P.derivative()
    with mpmath.workprec(precision + 16):
        z = mpmath.mpc(alpha)
        for _ in range(2 * precision.bit_length() + 8):
            p = P.eval_mp(z)
            dp = dP.eval_mp(z)
            if p == 0 or dp == 0:
                break
            step = p / dp
            z -= step
            if abs(step) <= abs(z) * mpmath.ldexp(1, -precision - 8):
                break
        return +z


def series_solution(n: int, c, mu, alpha, K: int = DEFAULT_TERMS,
                    precision: int = DEFAULT_PRECISION) -> SeriesSolution:
    """Frobenius coefficients a_0..a_K for the exponent ``alpha``.

    Parameters
    ----------
    n, c, mu
        Order, coupling and spectral parameter; ``c`` and ``mu`` are exact.
    alpha
        An indicial root. A Fraction is used exactly; anything else is taken
        as an approximation and Newton-polished at ``precision`` bits.
    K
        Truncation index.

    Raises
    ------
    ResonanceError
        If D_2n(alpha + 2nk; c) is negligible for some 1 <= k <= K.
    """
    n = _check_order(n)
    c = as_rational(c)
    mu = as_rational(mu)
    if K < 0:
        raise ValueError("K must be >= 0")
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    fam = build_indicial(n)
    alpha = _polish_root(n, c, alpha, precision)
    with mpmath.workprec(precision):
        a_mp = _alpha_mp(alpha)
        if abs(fam.evaluate(a_mp, c)) > mpmath.ldexp(1, -precision // 2) * max(1, abs(a_mp)) ** (2 * n):
            raise ValueError(f"alpha = {alpha} is not a root of D_{2 * n}(.; {c})")
        sgn = -1 if n % 2 else 1
        mu_mp = _mpq(mu)
        coeffs = [mpmath.mpc(1)]
        for k in range(1, K + 1):
            beta = a_mp + 2 * n * k
            den = fam.evaluate(beta, c)
            if abs(den) <= mpmath.ldexp(1, -precision // 2) * abs(beta) ** (2 * n):
                raise ResonanceError(f"resonant exponent at k={k}: alpha + {2 * n * k} is an indicial root")
            coeffs.append(sgn * mu_mp * coeffs[-1] / den)
    return SeriesSolution(n=n, c=c, mu=mu, alpha=alpha, coeffs=tuple(coeffs), precision=precision)


def eval_solution(s: SeriesSolution, x):
    """sum_k a_k x^(alpha + 2nk) for x > 0."""
    with mpmath.workprec(s.precision):
        x = _to_mp(x)
        if x <= 0:
            raise ValueError("x must be positive")
        a = _alpha_mp(s.alpha)
        x2n = x ** (2 * s.n)
        acc = mpmath.mpc(0)
        xp = mpmath.mpf(1)
        for ak in s.coeffs:
            acc += ak * xp
            xp *= x2n
        return acc * _power(x, a)


def _residual_at(s: SeriesSolution, x, prec: int):
    n = s.n
    with mpmath.workprec(prec):
        x = _to_mp(x)
        a = _alpha_mp(s.alpha)
        c = _mpq(s.c)
        mu = _mpq(s.mu)
        sgn = -1 if n % 2 else 1
        total = mpmath.mpc(0)
        for k, ak in enumerate(s.coeffs):
            beta = a + 2 * n * k
            # (-1)^n d^2n/dx^2n x^beta + c x^(beta - 2n) - mu x^beta
            lower = (sgn * _falling(beta, 2 * n) + c) * _power(x, beta - 2 * n)
            total += ak * (lower - mu * _power(x, beta))
        return total


def ode_residual(s: SeriesSolution, x):
    """(-1)^n y^(2n) + c x^(-2n) y - mu y for the truncated series.

    Evaluated term by term. The terms cancel down to -mu a_K x^(alpha+2nK),
    which can be far below the leading term, so the series is rebuilt with
    enough guard bits for that cancellation before summing; the result is
    returned at ``s.precision``.
    """
    with mpmath.workprec(s.precision):
        xm = _to_mp(x)
        if xm <= 0:
            raise ValueError("x must be positive")
        tail = s.tail(xm)
        lead = max((abs(ak) * xm ** (2 * s.n * k) for k, ak in enumerate(s.coeffs)), default=0)
        lead *= max(1, abs(_alpha_mp(s.alpha))) ** (2 * s.n) * max(1, xm ** (-2 * s.n))
        if tail == 0 or lead == 0:
            guard = 32
        else:
            guard = max(32, int(mpmath.log(lead / abs(tail), 2)) + 64)
    out_prec = s.precision
    prec = out_prec + guard
    if guard > 32:
        s = series_solution(s.n, s.c, s.mu, s.alpha, s.K, prec)
    r = _residual_at(s, x, prec)
    with mpmath.workprec(out_prec):
        return +r


def hyp0f1_reference(c, mu, x, precision: int = DEFAULT_PRECISION):
    """x^alpha_2 0F1(; 1 + (alpha_2 - alpha_1)/2; -mu x^2/4) for n = 1."""
    c = as_rational(c)
    with mpmath.workprec(precision):
        gamma = mpmath.sqrt(mpmath.mpc(_mpq(c) + mpmath.mpf(1) / 4))
        a1, a2 = mpmath.mpf(1) / 2 - gamma, mpmath.mpf(1) / 2 + gamma
        x = _to_mp(x)
        return _power(x, a2) * mpmath.hyp0f1(1 + (a2 - a1) / 2, -_mpq(as_rational(mu)) * x * x / 4)


def indicial_root(n: int, c, index: int, precision: int = DEFAULT_PRECISION):
    """alpha_index (1-based, canonical (Re, Im) order with multiplicity).

    Rational roots are returned exactly.
    """
    from .rootcount import numeric_roots

    c = as_rational(c)
    alphas = numeric_roots(n, c, precision).alphas
    if not 1 <= index <= len(alphas):
        raise ValueError(f"root index must be in 1..{len(alphas)}")
    z = alphas[index - 1]
    # snap to an exact rational root if there is one nearby
    if abs(z.imag) < mpmath.ldexp(1, -precision // 2):
        guess = Fraction(round(float(z.real) * 2), 2)
        if build_indicial(n).at(c)(guess) == 0:
            return guess
    return z


def solution_grid(s: SeriesSolution, x0, x1, points: int) -> list[tuple[str, str, str]]:
    """Rows (x, Re y, Im y) on an equispaced rational grid in [x0, x1]."""
    x0, x1 = as_rational(x0), as_rational(x1)
    if points < 2 or not 0 < x0 < x1:
        raise ValueError("need 0 < x0 < x1 and at least 2 points")
    digits = max(15, int(s.precision * math.log10(2)) - 10)
    rows = []
    for i in range(points):
        x = x0 + (x1 - x0) * Fraction(i, points - 1)
        y = eval_solution(s, x)
        rows.append((rational_str(x), mpmath.nstr(y.real, digits), mpmath.nstr(y.imag, digits)))
    return rows
