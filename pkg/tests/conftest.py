from fractions import Fraction

import pytest
from hypothesis import strategies as st

from deficiency.exact import QPolynomial


def rationals(max_num=10**6, max_den=10**3):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


def qpolys(max_degree=6, min_degree=0):
    coeff = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 6))
    polys = st.lists(coeff, min_size=min_degree + 1, max_size=max_degree + 1).map(QPolynomial)
    return polys.filter(lambda p: p.degree >= min_degree) if min_degree > 0 else polys


def to_sympy(p: QPolynomial, var):
    import sympy

    return sympy.Poly([sympy.Rational(a.numerator, a.denominator) for a in reversed(p.coeffs)] or [0], var)


@pytest.fixture(scope="session")
def sym_x():
    import sympy

    return sympy.Symbol("x")


# acceptance reporting: one line per criterion in the terminal summary
ACCEPTANCE_RESULTS: dict = {}


def pytest_runtest_makereport(item, call):
    criterion = getattr(item.function, "criterion", None)
    if criterion is None or call.when != "call":
        return
    ok = call.excinfo is None
    ACCEPTANCE_RESULTS[criterion[0]] = (ok, criterion[1], round(call.duration, 2))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, title, secs = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {k:>2}: {title} ({secs}s)")
