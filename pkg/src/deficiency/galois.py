"""Mod-p factorization shapes of the threshold polynomial.

The monic g_{n-1} is scaled to an integer monic polynomial, reduced modulo
primes, and split by distinct-degree factorization. By Dedekind's theorem a
square-free reduction with factor degrees (d_1, ..., d_r) exhibits an element
of that cycle type in the Galois group.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import QPolynomial
from .hurwitz import build_hurwitz, h_poly_leading_law
from .indicial import InvariantViolation, _check_order

FULL_CYCLE = "full-cycle"
NEAR_CYCLE = "(n-2)-cycle"
TRANSPOSITION = "transposition"
TARGETS = (FULL_CYCLE, NEAR_CYCLE, TRANSPOSITION)
DEFAULT_P_MAX = 10**8


class NotSquareFree:
    """Sentinel returned when gcd(f, f') is nonconstant modulo p."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NotSquareFree"


NOT_SQUARE_FREE = NotSquareFree()


def _is_prime(p: int) -> bool:
    from sympy import isprime

    return isprime(p)


def g_normalize(h: QPolynomial, n: int) -> QPolynomial:
    """g_{n-1} = (-1)^floor(n/2) (2n^2)^(-n) h_{n-1}."""
    n = _check_order(n)
    if h.degree != n - 1:
        raise ValueError(f"expected degree {n - 1}, got {h.degree}")
    g = h * Fraction(1, h_poly_leading_law(n))
    if g.leading != 1:
        raise InvariantViolation(f"g_{n - 1} is not monic (leading {g.leading})")
    return g


def g_poly(n: int) -> QPolynomial:
    return g_normalize(build_hurwitz(n).h_poly, n)


@dataclass(frozen=True)
class IntegerMonicPoly:
    """m^deg * g(X/m) with integer coefficients, ascending."""

    coeffs: tuple
    scale: int

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc


def _minimal_power_base(den: int, e: int) -> int:
    """Smallest m with den | m^e."""
    if den == 1:
        return 1
    if e == 0:
        raise InvariantViolation("leading coefficient is not integral")
    from sympy import factorint

    m = 1
    for p, k in factorint(den).items():
        m *= p ** (-(-k // e))
    return m


def minimal_scale(g: QPolynomial) -> int:
    """The least m with m^deg g(X/m) in Z[X]."""
    d = g.degree
    m = 1
    for j, a in enumerate(g.coeffs):
        mj = _minimal_power_base(a.denominator, d - j)
        m = m * mj // math.gcd(m, mj)
    return m


def clear_denominators(g: QPolynomial, scale: Optional[int] = None) -> IntegerMonicPoly:
    """Integer monic m^deg g(X/m).

    By default m is the least common denominator of the coefficients, which
    always works for a monic g and is the scale used for the reference
    tables; ``minimal_scale`` gives the smallest admissible m.
    """
    if g.leading != 1:
        raise ValueError("g must be monic")
    d = g.degree
    if scale is None:
        scale = 1
        for a in g.coeffs:
            scale = scale * a.denominator // math.gcd(scale, a.denominator)
    out = []
    for j, a in enumerate(g.coeffs):
        v = a * scale ** (d - j)
        if v.denominator != 1:
            raise ValueError(f"scale {scale} does not clear the X^{j} coefficient")
        out.append(v.numerator)
    return IntegerMonicPoly(coeffs=tuple(out), scale=scale)


# ---------------------------------------------------------------------------
# polynomials over F_p (lists of residues, ascending, no trailing zeros)


def _ptrim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim([v % p for v in out])


def _pdivmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        coef = a[k] * inv % p
        if coef:
            q[k - db] = coef
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - coef * b[j]) % p
    return _ptrim(q), _ptrim(a[:db])


def _pmod(a, b, p):
    return _pdivmod(a, b, p)[1]


def _pgcd(a, b, p):
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _pderiv(a, p):
    return _ptrim([(k * a[k]) % p for k in range(1, len(a))])


def _ppowmod(base, e, f, p):
    result = [1]
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        e >>= 1
        if e:
            base = _pmod(_pmul(base, base, p), f, p)
    return result


@dataclass(frozen=True)
class ModPPoly:
    p: int
    coeffs: tuple

    @classmethod
    def reduce(cls, f: IntegerMonicPoly, p: int) -> "ModPPoly":
        c = _ptrim([a % p for a in f.coeffs])
        if len(c) - 1 != f.degree:
            raise InvariantViolation("degree dropped on reduction")
        return cls(p=p, coeffs=tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "ModPPoly") -> "ModPPoly":
        return ModPPoly(self.p, tuple(_pmul(list(self.coeffs), list(other.coeffs), self.p)))

    def is_square_free(self) -> bool:
        c = list(self.coeffs)
        d = _pderiv(c, self.p)
        if not d:
            return False
        return len(_pgcd(c, d, self.p)) == 1


def distinct_degree_factorization(f: ModPPoly) -> list[tuple[int, ModPPoly]]:
    """[(d, product of all degree-d irreducible factors)] for square-free monic f."""
    p = f.p
    rest = list(f.coeffs)
    x = [0, 1]
    h = x
    d = 0
    out = []
    while len(rest) - 1 >= 2 * (d + 1):
        d += 1
        h = _ppowmod(h, p, rest, p)
        g = _pgcd(rest, _psub(h, x, p), p)
        if len(g) > 1:
            out.append((d, ModPPoly(p, tuple(g))))
            rest = _pdivmod(rest, g, p)[0]
            h = _pmod(h, rest, p)
    if len(rest) > 1:
        out.append((len(rest) - 1, ModPPoly(p, tuple(rest))))
    return out


def factor_degrees_mod_p(f: IntegerMonicPoly, p: int):
    """Sorted (descending) degree multiset of f mod p, or NOT_SQUARE_FREE.

    Examples
    --------
    >>> f = clear_denominators(g_poly(6))
    >>> factor_degrees_mod_p(f, 109)
    (2, 1, 1, 1)
    """
    if not isinstance(p, int) or not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    fp = ModPPoly.reduce(f, p)
    if not fp.is_square_free():
        return NOT_SQUARE_FREE
    degrees = []
    for d, prod in distinct_degree_factorization(fp):
        degrees.extend([d] * (prod.degree // d))
    if sum(degrees) != f.degree:
        raise InvariantViolation("degree multiset does not sum to the degree")
    return tuple(sorted(degrees, reverse=True))


def target_pattern(target: str, degree: int) -> tuple:
    if target == FULL_CYCLE:
        return (degree,)
    if target == NEAR_CYCLE:
        return (degree - 1, 1) if degree > 1 else (1,)
    if target == TRANSPOSITION:
        return (2,) + (1,) * (degree - 2)
    raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")


@dataclass(frozen=True)
class CycleTypeEvidence:
    target: str
    prime: Optional[int]  # None when nothing was found below p_max
    degrees: Optional[tuple]

    @property
    def found(self) -> bool:
        return self.prime is not None


def _primes(p_max: int):
    from sympy import primerange

    return primerange(2, p_max + 1)


def find_cycle_type_prime(f: IntegerMonicPoly, target: str, p_max: int = DEFAULT_P_MAX) -> CycleTypeEvidence:
    """Smallest prime p <= p_max whose square-free reduction has the target shape."""
    want = target_pattern(target, f.degree)
    for p in _primes(p_max):
        fp = ModPPoly.reduce(f, p)
        if not fp.is_square_free():
            continue
        degrees = []
        for d, prod in distinct_degree_factorization(fp):
            degrees.extend([d] * (prod.degree // d))
        got = tuple(sorted(degrees, reverse=True))
        if got == want:
            return CycleTypeEvidence(target=target, prime=int(p), degrees=got)
    return CycleTypeEvidence(target=target, prime=None, degrees=None)


def find_all_targets(f: IntegerMonicPoly, p_max: int = DEFAULT_P_MAX) -> dict:
    """One pass over the primes for all three shapes; same minima as three searches."""
    wants = {t: target_pattern(t, f.degree) for t in TARGETS}
    found: dict = {}
    for p in _primes(p_max):
        if len(found) == len(TARGETS):
            break
        fp = ModPPoly.reduce(f, p)
        if not fp.is_square_free():
            continue
        degrees = []
        for d, prod in distinct_degree_factorization(fp):
            degrees.extend([d] * (prod.degree // d))
        got = tuple(sorted(degrees, reverse=True))
        for t, w in wants.items():
            if t not in found and got == w:
                found[t] = CycleTypeEvidence(target=t, prime=int(p), degrees=got)
    return {t: found.get(t, CycleTypeEvidence(t, None, None)) for t in TARGETS}


def irreducibility_witness(f: IntegerMonicPoly, p_max: int = DEFAULT_P_MAX) -> Optional[int]:
    """Smallest prime with irreducible reduction, or None."""
    return find_cycle_type_prime(f, FULL_CYCLE, p_max).prime


def table_a1(ns, p_max: int = DEFAULT_P_MAX) -> list[dict]:
    rows = []
    for n in ns:
        if n < 2:
            raise ValueError("the cycle-type search needs n >= 2")
        f = clear_denominators(g_poly(n))
        ev = find_all_targets(f, p_max)
        rows.append({"n": n, **{t: ev[t].prime for t in TARGETS}})
    return rows
