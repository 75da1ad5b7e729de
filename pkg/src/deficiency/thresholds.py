"""Certified threshold constants and the L^2 classification bands.

A threshold is carried either as an exact rational or as a Sturm-certified
isolating interval on h_{n-1}; comparisons against rational c are exact, so
the closed/open band conventions are decided without any tolerance.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import IsolatingInterval, as_rational, isolate_real_roots, rational_str
from .hurwitz import build_hurwitz
from .indicial import InvariantViolation, _check_order, q0_closed_form


@dataclass(frozen=True)
class Threshold:
    """A real algebraic constant, exact or isolated."""

    value: Optional[Fraction] = None
    interval: Optional[IsolatingInterval] = None

    def __post_init__(self):
        if (self.value is None) == (self.interval is None):
            raise ValueError("exactly one of value / interval must be given")

    @property
    def is_exact(self) -> bool:
        return self.value is not None

    def compare(self, c) -> int:
        """Sign of (c - threshold)."""
        c = as_rational(c)
        if self.value is not None:
            return (c > self.value) - (c < self.value)
        return self.interval.compare(c)

    def bounds(self) -> tuple[Fraction, Fraction]:
        if self.value is not None:
            return self.value, self.value
        return self.interval.lo, self.interval.hi

    def sign(self) -> int:
        return -self.compare(0)

    def refined(self, rel_width) -> "Threshold":
        if self.value is not None:
            return self
        return Threshold(interval=self.interval.refine(rel_width=rel_width))

    def decimal(self, digits: int) -> str:
        """Correctly rounded decimal with ``digits`` significant digits."""
        if self.value is not None:
            return format_rational(self.value, digits, exact=True)
        iv = self.interval
        while True:
            lo_s = format_rational(iv.lo, digits)
            hi_s = format_rational(iv.hi, digits)
            if lo_s == hi_s:
                return lo_s
            ex = iv.exact
            if ex is not None:
                return format_rational(ex, digits, exact=True)
            iv = iv.bisect()

    def to_json(self, digits: int = 20):
        if self.value is not None:
            return rational_str(self.value)
        iv = self.interval
        return {"interval": [rational_str(iv.lo), rational_str(iv.hi)], "decimal": self.decimal(digits)}

    def __float__(self) -> float:
        lo, hi = self.bounds()
        return float((lo + hi) / 2)


def _round_sig(x: Fraction, digits: int) -> tuple[int, int]:
    """(mantissa, exponent) with x ≈ mantissa * 10^(exponent - digits + 1),
    10^(digits-1) <= |mantissa| < 10^digits, rounded half away from zero."""
    if x == 0:
        return 0, 0
    ax = abs(x)
    e = len(str(ax.numerator)) - len(str(ax.denominator))
    if Fraction(10) ** e > ax:
        e -= 1
    while Fraction(10) ** (e + 1) <= ax:
        e += 1
    scaled = ax / Fraction(10) ** (e - digits + 1)
    m = int(scaled)
    if scaled - m >= Fraction(1, 2):
        m += 1
    if m >= 10**digits:
        m //= 10
        e += 1
    return (m if x > 0 else -m), e


def format_rational(x: Fraction, digits: int, exact: bool = False) -> str:
    """Render with ``digits`` significant digits.

    Positional notation when the decimal exponent is in [-5, digits), else
    ``d.ddde+XX``. Exactly representable values drop trailing zeros when
    ``exact`` is set.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    x = as_rational(x)
    if exact and x.denominator == 1 and len(str(abs(x.numerator))) <= digits:
        return str(x.numerator)
    m, e = _round_sig(x, digits)
    sign = "-" if m < 0 else ""
    ds = str(abs(m)).rjust(digits, "0")
    if -5 <= e < digits:
        if e >= 0:
            s = ds[: e + 1] + ("." + ds[e + 1:] if len(ds) > e + 1 else "")
        else:
            s = "0." + "0" * (-e - 1) + ds
        if exact and "." in s:
            s = s.rstrip("0").rstrip(".")
        return sign + s
    mant = ds[0] + ("." + ds[1:] if len(ds) > 1 else "")
    if exact and "." in mant:
        mant = mant.rstrip("0").rstrip(".")
    return f"{sign}{mant}e{e:+03d}"


@dataclass(frozen=True)
class ThresholdSet:
    n: int
    entries: tuple  # Threshold, strictly increasing
    distinguished_index: int  # 1-based

    @property
    def c_n(self) -> Threshold:
        return self.entries[-1]

    def to_json(self, digits: int = 20) -> list:
        return [t.to_json(digits) for t in self.entries]


STORED_REL_WIDTH = Fraction(1, 2**64)
_CACHE: dict[int, ThresholdSet] = {}
_LOCK = threading.Lock()


def threshold_set(n: int) -> ThresholdSet:
    """The n constants c_n^(1) < ... < c_n^(n), certified and cached per n."""
    n = _check_order(n)
    with _LOCK:
        cached = _CACHE.get(n)
        if cached is None:
            cached = _CACHE[n] = _build_threshold_set(n)
    return cached


def _build_threshold_set(n: int) -> ThresholdSet:
    q0 = q0_closed_form(n)
    special = q0 if n % 2 else -q0
    if n == 1:
        return ThresholdSet(n=1, entries=(Threshold(value=Fraction(3, 4)),), distinguished_index=1)
    h = build_hurwitz(n).h_poly
    if h(special) == 0:
        raise InvariantViolation(f"(-1)^(n-1) q0 is a root of h_{n - 1}; thresholds would not be distinct")
    intervals = isolate_real_roots(h)
    if len(intervals) != n - 1:
        raise InvariantViolation(f"h_{n - 1} has {len(intervals)} real roots, expected {n - 1}")
    entries = []
    for iv in intervals:
        while iv.contains(special):
            iv = iv.bisect()
        iv = iv.refine(rel_width=STORED_REL_WIDTH)
        ex = iv.exact
        entries.append(Threshold(value=ex) if ex is not None else Threshold(interval=iv))
    entries.append(Threshold(value=special))
    entries.sort(key=lambda t: t.bounds()[0])
    for a, b in zip(entries, entries[1:]):
        if not a.bounds()[1] < b.bounds()[0] and not (a.bounds()[1] == b.bounds()[0] and b.is_exact is False):
            raise InvariantViolation("threshold separation could not be certified")
    idx = next(i for i, t in enumerate(entries) if t.is_exact and t.value == special) + 1
    ts = ThresholdSet(n=n, entries=tuple(entries), distinguished_index=idx)
    _check_structure(ts)
    return ts


def _check_structure(ts: ThresholdSet) -> None:
    n = ts.n
    if len(ts.entries) != n:
        raise InvariantViolation("wrong number of thresholds")
    if ts.distinguished_index != (n + 1) // 2:
        raise InvariantViolation(
            f"distinguished threshold at position {ts.distinguished_index}, expected {(n + 1) // 2}")
    negatives = sum(1 for t in ts.entries if t.sign() < 0)
    if negatives != n // 2:
        raise InvariantViolation(f"{negatives} negative thresholds, expected {n // 2}")
    if ts.c_n.compare(q0_closed_form(n)) > 0:
        raise InvariantViolation("largest threshold is below q0")


def selfadjoint_threshold(n: int, digits: int = 16) -> tuple[str, tuple[Fraction, Fraction]]:
    """c_n rendered to ``digits`` significant digits, with a certifying interval."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    t = threshold_set(n).c_n
    text = t.decimal(digits)
    return text, t.bounds()


def classify(n: int, c) -> int:
    """Number of power solutions x^alpha with Re alpha > -1/2 (the L^2 count)."""
    n = _check_order(n)
    c = as_rational(c)
    ts = threshold_set(n).entries
    if n == 1:
        return 1 if ts[0].compare(c) >= 0 else 2
    f = n // 2
    cmp = [t.compare(c) for t in ts]  # sign(c - t_k), index k-1
    if cmp[-1] >= 0:
        return n
    if cmp[0] <= 0:
        return n + 1
    # t_1 < c < t_n: locate by the closed/open conventions of each band
    for k in range(1, n):
        lo, hi = cmp[k - 1], cmp[k]  # c vs t_k, t_{k+1}
        if f < k <= n - 1 and lo >= 0 and hi < 0:
            return n + 2 * (n - k)
        if k == f and lo > 0 and hi < 0:
            return 2 * n
        if 1 <= k < f and lo > 0 and hi <= 0:
            return n + 2 * k + 1
    raise InvariantViolation(f"no classification band contains c = {c}")


def deficiency_indices(n: int, c) -> int:
    """n_+ = n_- = classify(n, c) - n."""
    d = classify(n, c) - n
    if not 0 <= d <= n:
        raise InvariantViolation(f"deficiency index {d} out of range")
    return d


def is_essentially_selfadjoint(n: int, c) -> bool:
    result = classify(n, c) == n
    if result != (threshold_set(n).c_n.compare(c) >= 0):
        raise InvariantViolation("classification disagrees with the comparison c >= c_n")
    return result


@dataclass(frozen=True)
class ClassificationBand:
    low: Optional[Threshold]  # None means -infinity
    high: Optional[Threshold]  # None means +infinity
    low_closed: bool
    high_closed: bool
    count: int

    def contains(self, c) -> bool:
        if self.low is not None:
            s = self.low.compare(c)
            if s < 0 or (s == 0 and not self.low_closed):
                return False
        if self.high is not None:
            s = self.high.compare(c)
            if s > 0 or (s == 0 and not self.high_closed):
                return False
        return True

    def to_json(self, digits: int = 20) -> dict:
        return {
            "low": None if self.low is None else self.low.to_json(digits),
            "high": None if self.high is None else self.high.to_json(digits),
            "low_closed": self.low_closed,
            "high_closed": self.high_closed,
            "count": self.count,
        }


def band_table(n: int) -> list[ClassificationBand]:
    """Partition of the real line into bands of constant L^2 count."""
    n = _check_order(n)
    ts = threshold_set(n).entries
    if n == 1:
        return [ClassificationBand(None, ts[0], False, False, 2),
                ClassificationBand(ts[0], None, True, False, 1)]
    f = n // 2
    bands = [ClassificationBand(None, ts[0], False, True, n + 1)]
    for k in range(1, n):
        lo, hi = ts[k - 1], ts[k]
        if k < f:
            bands.append(ClassificationBand(lo, hi, False, True, n + 2 * k + 1))
        elif k == f:
            bands.append(ClassificationBand(lo, hi, False, False, 2 * n))
        else:
            bands.append(ClassificationBand(lo, hi, True, False, n + 2 * (n - k)))
    bands.append(ClassificationBand(ts[-1], None, True, False, n))
    return bands
