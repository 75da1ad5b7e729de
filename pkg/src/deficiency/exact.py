"""Exact rational polynomial arithmetic.

Everything here is exact: coefficients are :class:`fractions.Fraction`
values and the heavier algorithms (gcd, Sturm chains, fraction-free
determinants) run internally on primitive integer polynomials so that
coefficient growth stays under control.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "InexactDivisionError",
    "QPolynomial",
    "QPolyMatrix",
    "IsolatingInterval",
    "as_rational",
    "rational_str",
    "poly_gcd",
    "squarefree_part",
    "squarefree_decomposition",
    "sturm_sequence",
    "sturm_count",
    "bareiss_det",
    "leading_minors",
    "taylor_shift",
    "isolate_real_roots",
]


class InexactDivisionError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def as_rational(value) -> Fraction:
    """Convert ints, Fractions or decimal/rational literals to an exact Fraction.

    Strings such as ``"0.74"`` or ``"-105/16"`` are taken literally; floats are
    rejected because their binary value is rarely what the caller meant.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a string literal or Fraction")
    return Fraction(value)


def rational_str(value: Fraction) -> str:
    """Serialize as ``"p/q"`` (or ``"p"`` when q = 1)."""
    return str(Fraction(value))


# ---------------------------------------------------------------------------
# integer polynomial helpers (ascending lists of ints, no trailing zeros)


def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _content(a: Sequence[int]) -> int:
    g = 0
    for x in a:
        g = math.gcd(g, x)
        if g == 1:
            break
    return g


def _primitive(a: Sequence[int]) -> list[int]:
    """Divide out the content and make the leading coefficient positive."""
    g = _content(a)
    if g == 0:
        return []
    if a[-1] < 0:
        g = -g
    return [x // g for x in a]


def _ipmul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _ipsub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


def _ipdiv_exact(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Exact quotient of integer polynomials; raises if not exact over Z."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(rem) - 1 < db:
        if _trim(rem):
            raise InexactDivisionError("inexact division")
        return []
    q = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c:
            t, r = divmod(c, lb)
            if r:
                raise InexactDivisionError("inexact division")
            q[k - db] = t
            off = k - db
            for j in range(db + 1):
                rem[off + j] -= t * b[j]
    if any(rem[:db]):
        raise InexactDivisionError("inexact division")
    return _trim(q)


def _iprem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    delta = len(rem) - 1 - db
    if delta < 0:
        return list(rem)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        rem = [lb * x for x in rem]
        if c:
            off = k - db
            for j in range(db + 1):
                rem[off + j] -= c * b[j]
        rem.pop()
    return _trim(rem)


def _ideriv(a: Sequence[int]) -> list[int]:
    return [i * a[i] for i in range(1, len(a))]


def _ihomog(a: Sequence[int], num: int, den: int) -> int:
    acc = 0
    dpow = 1
    for coeff in reversed(a):
        acc = acc * num + coeff * dpow
        dpow *= den
    return acc


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _to_int_poly(coeffs: Sequence[Fraction]) -> list[int]:
    """Primitive integer polynomial with the same roots (and same sign of lc)."""
    if not coeffs:
        return []
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    return _primitive(ints)


# ---------------------------------------------------------------------------


class QPolynomial:
    """Dense univariate polynomial over Q, coefficients in ascending degree.

    The zero polynomial has an empty coefficient tuple; otherwise the leading
    coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def x(cls) -> "QPolynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, c) -> "QPolynomial":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "QPolynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-as_rational(r), 1])
        return p

    @classmethod
    def _from_ints(cls, a: Sequence[int]) -> "QPolynomial":
        return cls([Fraction(x) for x in a])

    # -- basic properties
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == QPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPolynomial({[rational_str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = rational_str(abs(c)) + ("*" + mono if mono else "")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic
    @staticmethod
    def _coerce(other) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return other
        return QPolynomial([other])

    def __add__(self, other) -> "QPolynomial":
        o = self._coerce(other).coeffs
        a = self.coeffs
        n = max(len(a), len(o))
        return QPolynomial(
            [(a[i] if i < len(a) else 0) + (o[i] if i < len(o) else 0) for i in range(n)]
        )

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> "QPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            c = as_rational(other)
            return QPolynomial([c * x for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPolynomial":
        if k < 0:
            raise ValueError("negative power")
        out = QPolynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other) -> tuple["QPolynomial", "QPolynomial"]:
        b = self._coerce(other)
        if b.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = b.degree
        lb = b.leading
        if len(rem) - 1 < db:
            return QPolynomial(), self
        q = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c:
                t = c / lb
                q[k - db] = t
                off = k - db
                for j in range(db + 1):
                    rem[off + j] -= t * b.coeffs[j]
        return QPolynomial(q), QPolynomial(rem[:db])

    def __divmod__(self, other):
        return self.divmod(other)

    def __floordiv__(self, other) -> "QPolynomial":
        return self.divmod(other)[0]

    def __mod__(self, other) -> "QPolynomial":
        return self.divmod(other)[1]

    def exact_div(self, other) -> "QPolynomial":
        """Quotient of an exact division; raises :class:`InexactDivisionError`."""
        q, r = self.divmod(other)
        if r:
            raise InexactDivisionError(f"inexact division: remainder {r}")
        return q

    # -- calculus / evaluation
    def derivative(self) -> "QPolynomial":
        return QPolynomial([k * self.coeffs[k] for k in range(1, len(self.coeffs))])

    def __call__(self, x):
        """Horner evaluation; works for Fractions, ints, mpmath numbers, complex."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_mp(self, x):
        """Evaluate at an mpmath number (coefficients converted to mpf)."""
        import mpmath

        acc = mpmath.mpf(0)
        for c in reversed(self.coeffs):
            acc = acc * x + mpmath.mpf(c.numerator) / c.denominator
        return acc

    def monic(self) -> "QPolynomial":
        if self.is_zero():
            return self
        lc = self.leading
        return QPolynomial([c / lc for c in self.coeffs])

    def compose_scale(self, s) -> "QPolynomial":
        """Return p(s*x)."""
        s = as_rational(s)
        return QPolynomial([c * s**k for k, c in enumerate(self.coeffs)])

    def sign_at(self, x: Fraction) -> int:
        return _sign(self(as_rational(x)))

    def to_int_primitive(self) -> list[int]:
        return _to_int_poly(self.coeffs)

    # -- serialization
    def to_json(self) -> list[str]:
        return [rational_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "QPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls([Fraction(s) for s in data])


# ---------------------------------------------------------------------------


def poly_gcd(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    """Monic gcd, computed by a primitive pseudo-remainder sequence over Z."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    u = _to_int_poly(a.coeffs)
    v = _to_int_poly(b.coeffs)
    if len(u) < len(v):
        u, v = v, u
    while v:
        r = _iprem(u, v)
        u, v = v, _primitive(r)
    return QPolynomial._from_ints(u).monic()


def squarefree_part(p: QPolynomial) -> QPolynomial:
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free part")
    if p.degree <= 0:
        return QPolynomial([1])
    g = poly_gcd(p, p.derivative())
    return p.monic().exact_div(g)


def squarefree_decomposition(p: QPolynomial) -> list[tuple[QPolynomial, int]]:
    """Yun's algorithm: monic square-free factors with their multiplicities.

    Returns ``[(f_i, i), ...]`` with ``p = lc(p) * prod f_i**i``; constant
    factors are omitted.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree <= 0:
        return []
    f = p.monic()
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


# ---------------------------------------------------------------------------
# Sturm chains

_INF = float("inf")


def sturm_sequence(p: QPolynomial) -> list[list[int]]:
    """Sturm chain of ``p`` as primitive integer polynomials.

    Pseudo-remainders are rescaled by positive constants only, so the sign
    pattern of the classical chain p, p', -rem, ... is preserved.
    """
    if p.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial")
    p0 = _to_int_poly(p.coeffs)
    p1 = _primitive(_ideriv(p0)) if len(p0) > 1 else []
    # p0 is normalized to lc > 0; a global sign flip leaves variations unchanged
    chain = [p0]
    if not p1:
        return chain
    chain.append(p1)
    while True:
        a, b = chain[-2], chain[-1]
        if len(b) == 1:
            break
        delta = len(a) - len(b)
        r = _iprem(a, b)
        if not r:
            break
        # prem = lc(b)^(delta+1) * rem; keep the sign of -rem
        if b[-1] < 0 and (delta + 1) % 2 == 1:
            r = [-x for x in r]
        r = [-x for x in r]
        g = _content(r)
        chain.append([x // g for x in r])
    return chain


def _variations(signs: Iterable[int]) -> int:
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def _chain_signs(chain: list[list[int]], x) -> list[int]:
    if x == _INF:
        return [_sign(q[-1]) for q in chain]
    if x == -_INF:
        return [_sign(q[-1]) * (-1 if (len(q) - 1) % 2 else 1) for q in chain]
    x = as_rational(x)
    return [_sign(_ihomog(q, x.numerator, x.denominator)) for q in chain]


def sturm_count(p: QPolynomial, lo=-_INF, hi=_INF, chain=None) -> int:
    """Number of distinct real roots of a square-free ``p`` in ``(lo, hi]``.

    ``lo``/``hi`` may be rationals or ``±inf``.
    """
    if p.is_zero():
        raise ValueError("sturm_count of the zero polynomial")
    if chain is None:
        chain = sturm_sequence(p)
    return _variations(_chain_signs(chain, lo)) - _variations(_chain_signs(chain, hi))


# ---------------------------------------------------------------------------
# polynomial matrices and fraction-free determinants


@dataclass(frozen=True)
class QPolyMatrix:
    """Row-major matrix of QPolynomial entries."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        ents = tuple(e if isinstance(e, QPolynomial) else QPolynomial([e]) for e in self.entries)
        if len(ents) != self.rows * self.cols:
            raise ValueError("entries length must equal rows*cols")
        object.__setattr__(self, "entries", ents)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QPolyMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        flat = []
        for r in rows:
            if len(r) != nc:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(nr, nc, tuple(flat))

    def __getitem__(self, ij: tuple[int, int]) -> QPolynomial:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[QPolynomial]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def evaluate(self, c) -> "QPolyMatrix":
        c = as_rational(c)
        return QPolyMatrix(self.rows, self.cols, tuple(QPolynomial([e(c)]) for e in self.entries))

    def submatrix(self, k: int) -> "QPolyMatrix":
        """Leading k x k block."""
        return QPolyMatrix.from_rows([self.row(i)[:k] for i in range(k)])


def _scaled_integer_rows(m: QPolyMatrix) -> tuple[list[list[list[int]]], int]:
    """Integer-polynomial rows and the product of the row scale factors."""
    rows = []
    scale = 1
    for i in range(m.rows):
        ents = m.row(i)
        den = 1
        for e in ents:
            for c in e.coeffs:
                den = den * c.denominator // math.gcd(den, c.denominator)
        rows.append([[int(c * den) for c in e.coeffs] for e in ents])
        scale *= den
    return rows, scale


def _bareiss(rows: list[list[list[int]]], pivoting: bool):
    """Fraction-free elimination in place; yields successive pivots.

    Without pivoting the k-th pivot is the k-th leading principal minor of
    the scaled matrix. Returns (pivots, sign) where sign tracks row swaps.
    """
    n = len(rows)
    prev = [1]
    sign = 1
    pivots = []
    for k in range(n):
        if not rows[k][k]:
            if not pivoting:
                pivots.append([])
                return pivots, sign
            swap = next((i for i in range(k + 1, n) if rows[i][k]), None)
            if swap is None:
                pivots.append([])
                return pivots, sign
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        piv = rows[k][k]
        pivots.append(piv)
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            aik = ri[k]
            for j in range(k + 1, n):
                t = _ipmul(piv, ri[j])
                if aik and rk[j]:
                    t = _ipsub(t, _ipmul(aik, rk[j]))
                ri[j] = _ipdiv_exact(t, prev) if t else []
            ri[k] = []
        prev = piv
    return pivots, sign


def bareiss_det(m: QPolyMatrix) -> QPolynomial:
    """Exact determinant of a square polynomial matrix (Bareiss, with pivoting)."""
    if m.rows != m.cols:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return QPolynomial([1])
    rows, scale = _scaled_integer_rows(m)
    pivots, sign = _bareiss(rows, pivoting=True)
    last = pivots[-1]
    if len(pivots) < m.rows or not last:
        return QPolynomial()
    return QPolynomial([Fraction(sign * x, scale) for x in last])


def leading_minors(m: QPolyMatrix) -> list[QPolynomial]:
    """Leading principal minors Δ_1..Δ_k computed by one Bareiss pass.

    Stops at (and includes) the first vanishing minor, so a short or
    zero-terminated list signals degeneracy.
    """
    if m.rows != m.cols:
        raise ValueError("leading minors of a non-square matrix")
    rows, _ = _scaled_integer_rows(m)
    row_scales = []
    for i in range(m.rows):
        den = 1
        for e in m.row(i):
            for c in e.coeffs:
                den = den * c.denominator // math.gcd(den, c.denominator)
        row_scales.append(den)
    pivots, _ = _bareiss(rows, pivoting=False)
    out = []
    scale = 1
    for k, piv in enumerate(pivots):
        scale *= row_scales[k]
        out.append(QPolynomial([Fraction(x, scale) for x in piv]))
        if not piv:
            break
    return out


def taylor_shift(p: QPolynomial, a) -> QPolynomial:
    """Return q with q(x) = p(x + a), by repeated synthetic division."""
    a = as_rational(a)
    cs = list(p.coeffs)
    n = len(cs)
    for i in range(n - 1):
        for k in range(n - 2, i - 1, -1):
            cs[k] += a * cs[k + 1]
    return QPolynomial(cs)


# ---------------------------------------------------------------------------
# real root isolation

DEFAULT_REL_WIDTH = Fraction(1, 2**80)


@dataclass(frozen=True)
class IsolatingInterval:
    """Interval (lo, hi] containing exactly one real root of ``polynomial``.

    ``polynomial`` is square-free; when ``polynomial(hi) == 0`` the root is
    known exactly and equals ``hi``.
    """

    lo: Fraction
    hi: Fraction
    polynomial: QPolynomial
    floor: Fraction = Fraction(0)

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("isolating interval needs lo < hi")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def exact(self) -> Fraction | None:
        """The root if it is known exactly, else None."""
        if self.polynomial.degree == 1:
            return -self.polynomial[0] / self.polynomial[1]
        if self.polynomial(self.hi) == 0:
            return self.hi
        return None

    def contains(self, x) -> bool:
        x = as_rational(x)
        return self.lo < x <= self.hi

    def compare(self, x) -> int:
        """Sign of (x - root), decided exactly."""
        x = as_rational(x)
        ex = self.exact
        if ex is not None:
            return _sign(x - ex)
        if x <= self.lo:
            return -1
        if x > self.hi:
            return 1
        # x inside (lo, hi]: the root is <= x iff there is a root in (lo, x]
        n = sturm_count(self.polynomial, self.lo, x)
        if n == 0:
            return -1
        return 0 if self.polynomial(x) == 0 else 1

    def bisect(self) -> "IsolatingInterval":
        """One halving step (geometric while the interval spans many binades)."""
        ex = self.exact
        p = self.polynomial
        mid = _split_point(self.lo, self.hi, self.floor) if self.floor else self.midpoint
        if ex is not None:
            lo, hi = (mid, self.hi) if ex > mid else (self.lo, mid)
            if ex == self.hi:
                lo, hi = mid, self.hi
            return IsolatingInterval(lo, hi, p, self.floor)
        slo, shi, smid = p.sign_at(self.lo), p.sign_at(self.hi), p.sign_at(mid)
        if smid == 0:
            return IsolatingInterval(self.lo, mid, p, self.floor)
        if slo and shi and slo != shi:
            if smid == slo:
                return IsolatingInterval(mid, self.hi, p, self.floor)
            return IsolatingInterval(self.lo, mid, p, self.floor)
        if sturm_count(p, self.lo, mid) == 1:
            return IsolatingInterval(self.lo, mid, p, self.floor)
        return IsolatingInterval(mid, self.hi, p, self.floor)

    def refine(self, width=None, rel_width=DEFAULT_REL_WIDTH) -> "IsolatingInterval":
        """Bisect until width <= ``width`` or <= rel_width * max(1, |midpoint|)."""
        iv = self
        while True:
            target = as_rational(width) if width is not None else rel_width * max(
                Fraction(1), abs(iv.midpoint)
            )
            if iv.width <= target:
                return iv
            iv = iv.bisect()

    def to_json(self) -> dict:
        return {"lo": rational_str(self.lo), "hi": rational_str(self.hi),
                "polynomial": self.polynomial.to_json()}


def _cauchy_bound(p: QPolynomial) -> Fraction:
    lc = abs(p.leading)
    m = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    b = 1 + m / lc
    # round up to a power of two to keep bisection points short
    return Fraction(2 ** (math.ceil(b).bit_length() + 1))


def _root_free_radius(p: QPolynomial) -> Fraction:
    """Power of two r with no nonzero root of p in (-r, r)."""
    cs = p.coeffs
    k = next(i for i, c in enumerate(cs) if c)
    rev = QPolynomial(list(reversed(cs[k:])))
    if rev.degree <= 0:
        return Fraction(1)
    return 1 / _cauchy_bound(rev)


def _split_point(lo: Fraction, hi: Fraction, floor: Fraction) -> Fraction:
    """Midpoint for bisection: geometric across many binades, arithmetic otherwise.

    ``floor`` is a positive magnitude below which no nonzero root lies.
    """
    if lo < 0 < hi:
        return Fraction(0)
    if lo >= 0:
        a, b, sgn = max(lo, floor), hi, 1
    else:
        a, b, sgn = max(-hi, floor), -lo, -1
    if b > 16 * a:
        ea = a.numerator.bit_length() - a.denominator.bit_length()
        eb = b.numerator.bit_length() - b.denominator.bit_length()
        e = (ea + eb) // 2
        mid = Fraction(2) ** e
        if a < mid < b:
            return sgn * mid
    return (lo + hi) / 2


def isolate_real_roots(p: QPolynomial) -> list[IsolatingInterval]:
    """Sturm-certified isolating intervals for the distinct real roots of ``p``."""
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    sf = squarefree_part(p)
    if sf.degree <= 0:
        return []
    chain = sturm_sequence(sf)
    bound = _cauchy_bound(sf)
    floor = _root_free_radius(sf)
    out: list[IsolatingInterval] = []
    stack = [(-bound, bound, sturm_count(sf, -bound, bound, chain))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(IsolatingInterval(lo, hi, sf, floor))
            continue
        mid = _split_point(lo, hi, floor)
        nl = sturm_count(sf, lo, mid, chain)
        stack.append((mid, hi, n - nl))
        stack.append((lo, mid, nl))
    out.sort(key=lambda iv: iv.lo)
    return out
