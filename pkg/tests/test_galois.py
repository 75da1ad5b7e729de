from fractions import Fraction

import pytest
import sympy

from deficiency.galois import (
    FULL_CYCLE,
    NEAR_CYCLE,
    NOT_SQUARE_FREE,
    TRANSPOSITION,
    IntegerMonicPoly,
    ModPPoly,
    clear_denominators,
    distinct_degree_factorization,
    factor_degrees_mod_p,
    find_cycle_type_prime,
    g_normalize,
    g_poly,
    irreducibility_witness,
    minimal_scale,
    table_a1,
)
from deficiency.hurwitz import build_hurwitz

F = Fraction
X = sympy.Symbol("X")


def _sympy_degrees(f: IntegerMonicPoly, p: int):
    P = sympy.Poly(list(reversed(f.coeffs)), X, modulus=p)
    return tuple(sorted((fac.degree() for fac, e in P.factor_list()[1] for _ in range(e)), reverse=True))


def test_g_normalization():
    g2 = g_poly(3)
    assert g2.coeffs == (F(-146313216000, 5832), F(-207083520, 5832), F(1))
    g1 = g_poly(2)
    assert g1.degree == 1 and -g1[0] == 45
    assert g_poly(5)[3] == F(-5237598744576, 5)
    with pytest.raises(ValueError):
        g_normalize(build_hurwitz(3).h_poly, 4)


@pytest.mark.parametrize("n, m", [(5, 3125), (6, 729), (7, 823543)])
def test_scales(n, m):
    f = clear_denominators(g_poly(n))
    assert f.scale == m
    assert f.coeffs[-1] == 1
    assert minimal_scale(g_poly(n)) <= m
    fm = clear_denominators(g_poly(n), minimal_scale(g_poly(n)))
    assert all(isinstance(a, int) for a in fm.coeffs)


@pytest.mark.parametrize("n, p, residues", [
    (5, 19, [1, 11, 3, 11, 15]),
    (6, 23, [1, 5, 11, 7, 13, 16]),
])
def test_displayed_reductions(n, p, residues):
    f = clear_denominators(g_poly(n))
    assert list(reversed(ModPPoly.reduce(f, p).coeffs)) == residues


def _reflect(f: IntegerMonicPoly) -> IntegerMonicPoly:
    """f(-X) (monic for even degree)."""
    return IntegerMonicPoly(tuple((-1) ** k * a for k, a in enumerate(f.coeffs)), f.scale)


def test_n7_displayed_data_is_reflected():
    # the reference degree-6 reduction and factorizations match f(-X)
    f = _reflect(clear_denominators(g_poly(7)))
    assert list(reversed(ModPPoly.reduce(f, 37).coeffs)) == [1, 4, 25, 20, 16, 34, 8]
    P43 = sympy.Poly([1, 15, 5], X) * sympy.Poly([1, 27], X) * sympy.Poly([1, 20], X) \
        * sympy.Poly([1, 19], X) * sympy.Poly([1, 9], X)
    assert [a % 43 for a in P43.all_coeffs()] == list(reversed(ModPPoly.reduce(f, 43).coeffs))
    P89 = sympy.Poly([1, 46, 4, 23, 46, 50], X) * sympy.Poly([1, 30], X)
    assert [a % 89 for a in P89.all_coeffs()] == list(reversed(ModPPoly.reduce(f, 89).coeffs))
    for p in (37, 43, 89):
        assert factor_degrees_mod_p(f, p) == factor_degrees_mod_p(clear_denominators(g_poly(7)), p)


def test_n6_mod_109_displayed_factorization():
    f = clear_denominators(g_poly(6))
    P = sympy.Poly([1, 38, 24], X) * sympy.Poly([1, 42], X) * sympy.Poly([1, 41], X) * sympy.Poly([1, 11], X)
    assert [a % 109 for a in P.all_coeffs()] == list(reversed(ModPPoly.reduce(f, 109).coeffs))


@pytest.mark.parametrize("n, p, degrees", [
    (6, 23, (5,)), (6, 109, (2, 1, 1, 1)), (7, 37, (6,)), (7, 43, (2, 1, 1, 1, 1)), (7, 89, (5, 1)), (5, 19, (4,)),
])
def test_factor_degrees(n, p, degrees):
    f = clear_denominators(g_poly(n))
    assert factor_degrees_mod_p(f, p) == degrees == _sympy_degrees(f, p)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_degrees_match_sympy_over_many_primes(n):
    f = clear_denominators(g_poly(n))
    for p in sympy.primerange(11, 400):
        got = factor_degrees_mod_p(f, p)
        if got is NOT_SQUARE_FREE:
            assert sympy.degree(sympy.gcd(sympy.Poly(list(reversed(f.coeffs)), X, modulus=p),
                                          sympy.Poly(list(reversed(f.coeffs)), X, modulus=p).diff(X))) > 0
        else:
            assert sum(got) == f.degree
            assert got == _sympy_degrees(f, p)


def test_ddf_products_reassemble():
    f = clear_denominators(g_poly(7))
    fp = ModPPoly.reduce(f, 43)
    prod = ModPPoly(43, (1,))
    for _, part in distinct_degree_factorization(fp):
        prod = prod * part
    assert prod == fp


def test_not_prime_raises():
    with pytest.raises(ValueError):
        factor_degrees_mod_p(clear_denominators(g_poly(5)), 21)


def test_not_square_free():
    f = IntegerMonicPoly(coeffs=(1, 2, 1), scale=1)  # (X + 1)^2
    assert factor_degrees_mod_p(f, 7) is NOT_SQUARE_FREE


def test_cycle_type_search_examples():
    assert find_cycle_type_prime(clear_denominators(g_poly(6)), FULL_CYCLE, 1000).prime == 23
    assert find_cycle_type_prime(clear_denominators(g_poly(7)), TRANSPOSITION, 1000).prime == 43
    assert find_cycle_type_prime(clear_denominators(g_poly(5)), NEAR_CYCLE, 1000).prime == 17
    assert irreducibility_witness(clear_denominators(g_poly(5)), 1000) == 19
    missing = find_cycle_type_prime(clear_denominators(g_poly(8)), TRANSPOSITION, 1000)
    assert not missing.found and missing.prime is None


def test_table_a1_small_rows():
    rows = table_a1(range(4, 8), 1000)
    got = [(r["n"], r[FULL_CYCLE], r[NEAR_CYCLE], r[TRANSPOSITION]) for r in rows]
    assert got == [(4, 23, 13, 13), (5, 19, 17, 71), (6, 23, 47, 109), (7, 37, 89, 43)]


@pytest.mark.slow
def test_table_a1_rows_8_to_10():
    rows = table_a1(range(8, 11), 20000)
    got = [(r["n"], r[FULL_CYCLE], r[NEAR_CYCLE], r[TRANSPOSITION]) for r in rows]
    assert got == [(8, 67, 29, 8089), (9, 179, 47, 7639), (10, 43, 167, 11519)]


def test_g4_coefficients():
    assert g_poly(5).coeffs == (
        F(246639641224100448713004224731938816, 5),
        F(2933863158888223380395161288704, 125),
        F(-3477424021724410819117056, 3125),
        F(-5237598744576, 5),
        F(1),
    )
