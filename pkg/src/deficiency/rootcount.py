"""Location of the indicial roots relative to the critical line Re z = -1/2.

Two independent routes are provided:

* an exact one, using signs of the leading principal Hurwitz minors of the
  shifted polynomial D_2n(w - 1/2; c) (Routh's theorem), and
* a certified numeric one, running Aberth-Ehrlich iteration on the exact
  square-free factors and certifying each root with an inclusion disk.

Roots exactly on the line are always counted exactly, through the common
real roots of the real and imaginary parts of D_2n(-1/2 + iy; c).
"""
from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

import mpmath

from .exact import (
    QPolynomial,
    as_rational,
    leading_minors,
    poly_gcd,
    rational_str,
    squarefree_decomposition,
    sturm_count,
)
from .indicial import _check_order, beta_roots, build_indicial, canonical_order, shifted_coeffs

DEFAULT_PRECISION = 256
MAX_SWEEPS = 200
MAX_ESCALATIONS = 4
JITTER_SEED = 20231017


class RootFindingError(RuntimeError):
    """Aberth iteration failed to converge or to certify within its caps."""


class HalfPlaneCounts(NamedTuple):
    gt: int
    on: int
    lt: int


@dataclass(frozen=True)
class DegenerateSignal:
    """Returned by the exact route when some leading Hurwitz minor vanishes."""

    n: int
    c: Fraction
    vanishing_minor: int
    on: int


@dataclass(frozen=True)
class LinePair:
    """D_2n(-1/2 + iy; c) = A(y) + i B(y)."""

    A: QPolynomial
    B: QPolynomial


@dataclass(frozen=True)
class RootInventory:
    n: int
    c: Fraction
    roots: tuple  # ((mpc, multiplicity), ...) in canonical (Re, Im) order
    counts: HalfPlaneCounts
    method: str
    precision: int
    radii: tuple = field(default=(), compare=False)

    @property
    def alphas(self) -> list:
        """alpha_1..alpha_2n with multiplicity, in canonical order."""
        out = []
        for z, m in self.roots:
            out.extend([z] * m)
        return out

    def to_json(self) -> dict:
        digits = max(15, int(self.precision * math.log10(2)) - 3)
        return {
            "n": self.n,
            "c": rational_str(self.c),
            "precision_bits": self.precision,
            "method": self.method,
            "roots": [[_dec(z.real, digits), _dec(z.imag, digits), m] for z, m in self.roots],
            "counts": list(self.counts),
        }


def _dec(x, digits: int) -> str:
    return mpmath.nstr(x, digits)


def _mpq(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


# ---------------------------------------------------------------------------
# exact on-line counting


def line_pair(n: int, c) -> LinePair:
    c = as_rational(c)
    Q = shifted_coeffs(build_indicial(_check_order(n))).polynomial(c)
    a = []
    b = []
    for j, q in enumerate(Q.coeffs):
        # i^j = (-1)^(j//2) for even j, (-1)^((j-1)//2) * i for odd j
        s = -1 if (j // 2) % 2 else 1
        if j % 2 == 0:
            a.append(s * q)
            b.append(0)
        else:
            a.append(0)
            b.append(s * q)
    return LinePair(QPolynomial(a), QPolynomial(b))


def count_on_line(n: int, c) -> int:
    """Roots of D_2n(.; c) with Re = -1/2, with multiplicity, exactly."""
    lp = line_pair(n, c)
    if lp.A.is_zero() and lp.B.is_zero():
        raise ValueError("D_2n vanishes identically on the line")
    g = poly_gcd(lp.A, lp.B)
    if g.degree <= 0:
        return 0
    total = 0
    for factor, mult in squarefree_decomposition(g):
        total += mult * sturm_count(factor)
    return total


def _variations(values) -> int:
    v, prev = 0, 0
    for x in values:
        s = (x > 0) - (x < 0)
        if s and prev and s != prev:
            v += 1
        if s:
            prev = s
    return v


def count_halfplanes_exact(n: int, c):
    """(gt, on, lt) from Routh's theorem, or a DegenerateSignal.

    gt is the number of sign variations of 1, Δ1, Δ2/Δ1, ..., Δ2n/Δ2n-1 where
    Δk are the leading principal minors of the Hurwitz matrix at c.
    """
    from .hurwitz import hurwitz_matrix

    c = as_rational(c)
    N = 2 * _check_order(n)
    on = count_on_line(n, c)
    minors = leading_minors(hurwitz_matrix(n).evaluate(c))
    values = [m[0] for m in minors]
    if len(values) < N or any(v == 0 for v in values):
        k = next((i + 1 for i, v in enumerate(values) if v == 0), len(values) + 1)
        return DegenerateSignal(n=n, c=c, vanishing_minor=k, on=on)
    ratios = [Fraction(1), values[0]] + [values[k] / values[k - 1] for k in range(1, N)]
    gt = _variations(ratios)
    if on:
        raise AssertionError("nonvanishing Hurwitz determinant with a root on the line")
    return HalfPlaneCounts(gt, 0, N - gt)


# ---------------------------------------------------------------------------
# Aberth-Ehrlich on square-free factors


def _initial_points(n: int, c: Fraction, factor: QPolynomial, full: bool) -> list[complex]:
    rng = random.Random(JITTER_SEED)
    d = factor.degree
    if full:
        base = [complex(z) for z in beta_roots(n, c, 53)]
        spread = max(1.0, abs(float(c)) ** (1.0 / (2 * n)))
    else:
        center = -float(factor[d - 1]) / d
        spread = 1.0 + max(abs(float(x)) for x in factor.coeffs[:-1]) ** (1.0 / d)
        base = [center + spread * cmath.exp(1j * (2 * math.pi * k / d + 0.4)) for k in range(d)]
    out = []
    for z in base:
        u = rng.random() * 2 * math.pi
        out.append(z + 1e-3 * spread * cmath.exp(1j * u))
    # identical starting points stall the iteration; spread clustered starts on a circle
    if full and spread <= 1.0:
        out = [z + 0.5 * n * cmath.exp(1j * (2 * math.pi * k / d + 0.3)) for k, z in enumerate(out)]
    return out


def _aberth_float(coeffs: list[float], z: list[complex], sweeps: int) -> list[complex]:
    d = len(coeffs) - 1
    dcoeffs = [k * coeffs[k] for k in range(1, d + 1)]
    for _ in range(sweeps):
        moved = 0.0
        for k in range(d):
            zk = z[k]
            p = 0j
            for a in reversed(coeffs):
                p = p * zk + a
            dp = 0j
            for a in reversed(dcoeffs):
                dp = dp * zk + a
            if p == 0:
                continue
            if dp == 0:
                dp = 1e-300
            ratio = p / dp
            s = sum(1 / (zk - z[j]) for j in range(d) if j != k and z[j] != zk)
            w = ratio / (1 - ratio * s)
            if not (math.isfinite(w.real) and math.isfinite(w.imag)):
                return z
            z[k] = zk - w
            moved = max(moved, abs(w) / max(1.0, abs(zk)))
        if moved < 1e-14:
            break
    return z


def _aberth_mp(factor: QPolynomial, z0: list, precision: int) -> tuple[list, list]:
    """Polish at ``precision`` bits; returns (roots, inclusion radii)."""
    d = factor.degree
    with mpmath.workprec(precision + 20):
        coeffs = [_mpq(a) for a in factor.coeffs]
        dcoeffs = [k * coeffs[k] for k in range(1, d + 1)]
        z = [mpmath.mpc(w) for w in z0]
        eps = mpmath.ldexp(1, -precision)
        converged = False
        for _ in range(MAX_SWEEPS):
            moved = mpmath.mpf(0)
            for k in range(d):
                zk = z[k]
                p = mpmath.polyval(coeffs[::-1], zk)
                if p == 0:
                    continue
                dp = mpmath.polyval(dcoeffs[::-1], zk)
                s = mpmath.fsum(1 / (zk - z[j]) for j in range(d) if j != k)
                ratio = p / dp if dp != 0 else mpmath.mpc(1)
                w = ratio / (1 - ratio * s)
                z[k] = zk - w
                moved = max(moved, abs(w) / max(1, abs(zk)))
            if moved <= eps:
                converged = True
                break
        if not converged:
            raise RootFindingError(f"Aberth iteration did not converge in {MAX_SWEEPS} sweeps")
        radii = []
        for zk in z:
            p = mpmath.polyval(coeffs[::-1], zk)
            dp = mpmath.polyval(dcoeffs[::-1], zk)
            if p == 0:
                radii.append(mpmath.mpf(0))
            elif dp == 0:
                radii.append(mpmath.inf)
            else:
                radii.append(d * abs(p / dp))
        return z, radii


def _disks_disjoint(z: list, r: list) -> bool:
    for i in range(len(z)):
        for j in range(i + 1, len(z)):
            if abs(z[i] - z[j]) <= r[i] + r[j]:
                return False
    return True


def _roots_once(n: int, c: Fraction, precision: int):
    fam = build_indicial(n)
    D = fam.at(c)
    parts = squarefree_decomposition(D)
    found = []
    for factor, mult in parts:
        d = factor.degree
        if d == 1:
            root = -factor[0] / factor[1]
            found.append((mpmath.mpc(_mpq(root)), mpmath.mpf(0), mult))
            continue
        full = d == 2 * n
        start = _initial_points(n, c, factor, full)
        try:
            start = _aberth_float([float(a) for a in factor.coeffs], start, 100)
        except (OverflowError, ZeroDivisionError):
            pass
        z, radii = _aberth_mp(factor, start, precision)
        if not _disks_disjoint(z, radii):
            return None
        for zk, rk in zip(z, radii):
            found.append((zk, rk, mult))
    return found


def numeric_roots(n: int, c, precision: int = DEFAULT_PRECISION) -> RootInventory:
    """All 2n roots with exact multiplicities and certified half-plane counts."""
    n = _check_order(n)
    c = as_rational(c)
    if precision < 53:
        raise ValueError("precision must be at least 53 bits")
    on = count_on_line(n, c)
    prec = precision
    for _ in range(MAX_ESCALATIONS + 1):
        found = _roots_once(n, c, prec)
        if found is not None:
            with mpmath.workprec(prec):
                line = mpmath.mpf(-0.5)
                gt = lt = amb = 0
                for z, r, m in found:
                    if z.real - r > line:
                        gt += m
                    elif z.real + r < line:
                        lt += m
                    else:
                        amb += m
                if amb == on:
                    return _inventory(n, c, found, HalfPlaneCounts(gt, on, lt), precision, prec)
        prec *= 2
    raise RootFindingError(f"could not certify root positions for n={n}, c={c}")


def _inventory(n, c, found, counts, precision, used_prec) -> RootInventory:
    with mpmath.workprec(precision):
        pts = [(+z, r, m) for z, r, m in found]
        order = canonical_order([z for z, _, _ in pts], precision)
        # map back: canonical_order returns the same objects
        lookup = {id(z): (r, m) for z, r, m in pts}
        roots = tuple((z, lookup[id(z)][1]) for z in order)
        radii = tuple(lookup[id(z)][0] for z in order)
    method = "certified-numeric" if used_prec == precision else "hybrid"
    return RootInventory(n=n, c=c, roots=roots, counts=counts, method=method,
                         precision=precision, radii=radii)


def count_right(n: int, c, cross_check: bool = False, precision: int = DEFAULT_PRECISION) -> HalfPlaneCounts:
    """(gt, on, lt); gt is the number of square-integrable power solutions at 0.

    Uses the exact Hurwitz-minor route when it is nondegenerate and falls back
    to certified numerics otherwise. With ``cross_check`` both routes run and
    must agree.
    """
    exact = count_halfplanes_exact(n, c)
    if isinstance(exact, DegenerateSignal):
        return numeric_roots(n, c, precision).counts
    if cross_check:
        num = numeric_roots(n, c, precision).counts
        if num != exact:
            raise AssertionError(f"exact {tuple(exact)} and numeric {tuple(num)} counts disagree at n={n}, c={c}")
    return exact
