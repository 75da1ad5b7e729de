"""The indicial family D_2n(z; c) = prod_{j=1}^{2n} (z - (j-1)) + (-1)^n c.

The coupling c only ever enters through the constant term, so the family is
stored as the c = 0 polynomial plus a sign.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .exact import QPolynomial, as_rational, taylor_shift

HALF = Fraction(1, 2)


class InvariantViolation(RuntimeError):
    """An internal identity that must hold exactly was found to fail."""


def _check_order(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"order n must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"order n must be >= 1, got {n}")
    return n


def double_factorial(k: int) -> int:
    """k!! for k >= -1, by exact integer product."""
    if k < -1:
        raise ValueError("double factorial undefined below -1")
    return math.prod(range(k, 0, -2)) if k > 0 else 1


@dataclass(frozen=True)
class IndicialFamily:
    n: int
    P: QPolynomial
    sign: int

    def constant_shift(self, c) -> Fraction:
        return self.sign * as_rational(c)

    def at(self, c) -> QPolynomial:
        """D_2n(.; c) as an exact polynomial."""
        return self.P + self.constant_shift(c)

    def evaluate(self, z, c):
        """D_2n(z; c) for exact or mpmath/complex z."""
        c = as_rational(c)
        if isinstance(z, (int, Fraction)):
            return self.P(Fraction(z)) + self.sign * c
        return _eval_mp(self.P, z) + self.sign * mpmath.mpf(c.numerator) / c.denominator


def _eval_mp(p: QPolynomial, z):
    acc = mpmath.mpc(0)
    for coeff in reversed(p.coeffs):
        acc = acc * z + mpmath.mpf(coeff.numerator) / coeff.denominator
    return acc


@lru_cache(maxsize=None)
def build_indicial(n: int) -> IndicialFamily:
    n = _check_order(n)
    P = QPolynomial.from_roots(range(2 * n))
    return IndicialFamily(n=n, P=P, sign=-1 if n % 2 else 1)


def q0_closed_form(n: int) -> Fraction:
    """(4n-1)!! / 2^(2n), the value of D_2n(-1/2; 0)."""
    n = _check_order(n)
    return Fraction(double_factorial(4 * n - 1), 4**n)


def birman_constant(n: int) -> Fraction:
    """[(2n-1)!!]^2 / 2^(2n); c = -birman_constant(n) is the double-root borderline."""
    n = _check_order(n)
    return Fraction(double_factorial(2 * n - 1) ** 2, 4**n)


@dataclass(frozen=True)
class ShiftedCoeffs:
    """Coefficients q_0..q_2n of D_2n(z - 1/2; 0); c adds sign*c to q_0."""

    n: int
    q: tuple
    sign: int

    def polynomial(self, c=0) -> QPolynomial:
        cs = list(self.q)
        cs[0] += self.sign * as_rational(c)
        return QPolynomial(cs)


@lru_cache(maxsize=None)
def shifted_coeffs(fam: IndicialFamily) -> ShiftedCoeffs:
    q = taylor_shift(fam.P, -HALF).coeffs
    expected = q0_closed_form(fam.n)
    if q[0] != expected:
        raise InvariantViolation(f"q0 = {q[0]} but (4n-1)!!/4^n = {expected} for n = {fam.n}")
    if q[-1] != 1:
        raise InvariantViolation("leading shifted coefficient is not 1")
    return ShiftedCoeffs(n=fam.n, q=tuple(q), sign=fam.sign)


def beta_roots(n: int, c, precision: int = 256) -> list:
    """Roots of [z - (n - 1/2)]^(2n) + (-1)^n c = 0, sorted by (Re, Im).

    These are the comparison roots that the true indicial roots approach as
    |c| grows; computed in floating complex arithmetic at ``precision`` bits.
    """
    n = _check_order(n)
    if precision < 53:
        raise ValueError("precision must be at least 53 bits")
    c = as_rational(c)
    with mpmath.workprec(precision):
        center = mpmath.mpf(2 * n - 1) / 2
        target = (-1) ** (n - 1) * (mpmath.mpf(c.numerator) / c.denominator)
        if c == 0:
            roots = [mpmath.mpc(center, 0)] * (2 * n)
        else:
            r = abs(target) ** (mpmath.mpf(1) / (2 * n))
            phase = 0 if target > 0 else mpmath.pi
            roots = []
            for k in range(2 * n):
                theta = (phase + 2 * mpmath.pi * k) / (2 * n)
                roots.append(center + r * mpmath.expj(theta))
        roots = [+z for z in roots]
        return canonical_order(roots, precision)


def canonical_order(roots, precision: int) -> list:
    """Sort by (Re, Im) ascending, treating real parts equal to within
    2^(8 - precision) relative as ties so conjugate pairs order by Im."""
    if not roots:
        return []
    scale = max(1, max(abs(z.real) for z in roots))
    tol = scale * mpmath.ldexp(1, 8 - precision)
    ordered = sorted(roots, key=lambda z: z.real)
    groups, cur = [], [ordered[0]]
    for z in ordered[1:]:
        if abs(z.real - cur[-1].real) <= tol:
            cur.append(z)
        else:
            groups.append(cur)
            cur = [z]
    groups.append(cur)
    out = []
    for g in groups:
        out.extend(sorted(g, key=lambda z: z.imag))
    return out
