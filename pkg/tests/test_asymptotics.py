import pytest

from deficiency.asymptotics import asymptotic_row, cn_highprec, mp_to_decimal, table_a2, table_a3

import mpmath


def test_cn_examples():
    assert cn_highprec(3, 6) == "36201.2"
    assert cn_highprec(5, 6) == "1.04858e+12"
    assert cn_highprec(1, 6) == "0.75"
    with pytest.raises(ValueError):
        cn_highprec(3, 51)


def test_rows_small():
    rows = table_a2(6)
    assert rows[0].conjecture_value == "0.405285"
    assert (rows[5].cn, rows[5].conjecture_value) == ("2.10674e+16", "2.09987e+16")
    ratios = [float(r.cn) / float(r.conjecture_value) for r in rows[2:]]
    assert all(a > b for a, b in zip(ratios, ratios[1:]))


def test_table_a3_row_one():
    r = table_a3(1)[0]
    assert (r.lower_bound, r.upper_bound) == ("0.63661977", "1.0000000")
    assert r.mid_value == "0.86602540"
    assert r.sandwich


def test_digits_stable_under_guard_bits():
    a = asymptotic_row(7, 8)
    with mpmath.workprec(400):
        b = asymptotic_row(7, 8)
    assert a == b


def test_parallel_matches_serial():
    assert table_a2(5, jobs=2) == table_a2(5)


def test_mp_to_decimal_sign():
    assert mp_to_decimal(mpmath.mpf(-2.5), 3) == "-2.50"
