"""Growth of the self-adjointness threshold c_n against (2n^2/pi)^(2n)."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

import mpmath

from .indicial import _check_order
from .thresholds import format_rational, threshold_set

MAX_DIGITS = 50


def _prec(digits: int) -> int:
    return digits * 4 + 32


def mp_to_decimal(x, digits: int) -> str:
    """Correctly round the (dyadic) mpf value ``x`` to ``digits`` significant digits."""
    x = mpmath.mpf(x)
    if not mpmath.isfinite(x):
        raise ValueError(f"cannot render {x}")
    man, exp = x.man_exp  # man is unsigned
    value = Fraction(man) * Fraction(2) ** exp
    return format_rational(-value if x < 0 else value, digits)


def cn_highprec(n: int, digits: int = 6) -> str:
    """c_n to ``digits`` significant digits, by exact bisection of its interval."""
    if not 1 <= digits <= MAX_DIGITS:
        raise ValueError(f"digits must be in 1..{MAX_DIGITS}")
    return threshold_set(n).c_n.decimal(digits)


def _root_2n(n: int, digits: int) -> str:
    """c_n^(1/2n) correctly rounded, refining the certified interval as needed."""
    t = threshold_set(n).c_n
    if t.is_exact:
        with mpmath.workprec(_prec(digits) + 64):
            v = mpmath.root(mpmath.mpf(t.value.numerator) / t.value.denominator, 2 * n)
            return mp_to_decimal(v, digits)
    iv = t.interval
    rel = Fraction(1, 10 ** (digits + 4))
    while True:
        iv = iv.refine(rel_width=rel)
        with mpmath.workprec(_prec(digits) + 64):
            lo = mpmath.root(mpmath.mpf(iv.lo.numerator) / iv.lo.denominator, 2 * n)
            hi = mpmath.root(mpmath.mpf(iv.hi.numerator) / iv.hi.denominator, 2 * n)
            a, b = mp_to_decimal(lo, digits), mp_to_decimal(hi, digits)
        if a == b:
            return a
        rel /= 2**16


@dataclass(frozen=True)
class AsymptoticRow:
    n: int
    cn: str
    conjecture_value: str  # (2n^2/pi)^(2n)
    lower_bound: str  # 2n^2/pi
    mid_value: str  # c_n^(1/(2n))
    upper_bound: str  # n / sin(pi/(2n))
    sandwich: bool  # lower < mid < upper, decided on the certified interval

    def to_json(self) -> dict:
        return asdict(self)


def _sandwich(n: int) -> bool:
    """2n^2/pi < c_n^(1/2n) < n/sin(pi/2n), checked against certified bounds."""
    t = threshold_set(n).c_n
    lo, hi = t.bounds()
    prec = 128
    while True:
        with mpmath.workprec(prec):
            lower = (2 * n * n / mpmath.pi) ** (2 * n)
            upper = (n / mpmath.sin(mpmath.pi / (2 * n))) ** (2 * n)
            eps = mpmath.ldexp(1, 16 - prec) * upper
            clo = mpmath.mpf(lo.numerator) / lo.denominator
            chi = mpmath.mpf(hi.numerator) / hi.denominator
            if clo > lower + eps and chi < upper - eps:
                return True
            if chi < lower - eps or clo > upper + eps:
                return False
        if prec > 4096:
            return False
        prec *= 2
        if not t.is_exact:
            t = t.refined(Fraction(1, 2**prec))
            lo, hi = t.bounds()


def asymptotic_row(n: int, digits: int = 8) -> AsymptoticRow:
    n = _check_order(n)
    if not 1 <= digits <= MAX_DIGITS:
        raise ValueError(f"digits must be in 1..{MAX_DIGITS}")
    with mpmath.workprec(_prec(digits)):
        lower = 2 * n * n / mpmath.pi
        upper = n / mpmath.sin(mpmath.pi / (2 * n))
        conj = lower ** (2 * n)
        row = AsymptoticRow(
            n=n,
            cn=cn_highprec(n, digits),
            conjecture_value=mp_to_decimal(conj, digits),
            lower_bound=mp_to_decimal(lower, digits),
            mid_value=_root_2n(n, digits),
            upper_bound=mp_to_decimal(upper, digits),
            sandwich=_sandwich(n),
        )
    return row


def _rows(n_max: int, digits: int, jobs: int) -> list[AsymptoticRow]:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    ns = range(1, n_max + 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # largest n first so the slow determinants start early; map keeps order
            order = sorted(ns, reverse=True)
            rows = dict(zip(order, pool.map(asymptotic_row, order, [digits] * len(order))))
        return [rows[n] for n in ns]
    return [asymptotic_row(n, digits) for n in ns]


def table_a2(n_max: int = 12, digits: int = 6, jobs: int = 1) -> list[AsymptoticRow]:
    """Rows n = 1..n_max of c_n versus (2n^2/pi)^(2n)."""
    return _rows(n_max, digits, jobs)


def table_a3(n_max: int = 25, digits: int = 8, jobs: int = 1) -> list[AsymptoticRow]:
    """Rows n = 1..n_max of the sandwich 2n^2/pi < c_n^(1/2n) < n/sin(pi/2n)."""
    return _rows(n_max, digits, jobs)
