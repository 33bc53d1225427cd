from fractions import Fraction
from math import gcd

import pytest
from hypothesis import strategies as st

from weighted_lengths.core import validate

# (m, n, theorem_mode). Covers d = 1 and d = 2, rho1 = 0, rho3 = 0, negative weights
# and a generator list with repeats.
INSTANCES = [
    ((20, 9, 6), (1, 1, 1), False),
    ((4, 7, 2), (9, 20, 6), True),
    ((3, 9, 4), (5, 17, 8), True),  # d = 2
    ((1, 0, 0), (6, 9, 20), True),  # rho1 = 0
    ((20, 6, -9), (5, 3, 4), True),
    ((3, 6, 1), (4, 8, 5), True),  # rho3 = 0
    ((1, 1, 1), (6, 9, 20), True),
    ((5, 1, -2), (3, 4, 7), True),
    ((2, 3, 1), (2, 6, 3), True),
    ((7, 2, 0), (5, 3, 11), True),
    ((0, 0, -1), (4, 7, 9), True),  # rho3 = 0
    ((6, 4, 2), (3, 5, 7), True),
]


@pytest.fixture(params=INSTANCES, ids=lambda p: f"m={p[0]}-n={p[1]}")
def instance(request):
    m, n, thm = request.param
    return validate(m, n, theorem_mode=thm)


def order_by_ratio(m, n):
    """Permute coordinates so that m_i/n_i is weakly decreasing."""
    idx = sorted(range(3), key=lambda i: Fraction(m[i], n[i]), reverse=True)
    return tuple(m[i] for i in idx), tuple(n[i] for i in idx)


@st.composite
def weight_systems(draw, max_gen=12, max_weight=10, theorem_mode=True):
    gens = st.integers(1, max_gen)
    triples = st.tuples(gens, gens, gens)
    if theorem_mode:
        triples = triples.filter(lambda v: len(set(v)) == 3 and gcd(*v) == 1)
    n = draw(triples)
    w = st.integers(-max_weight, max_weight)
    m = draw(st.tuples(w, w, w).filter(lambda v: len({Fraction(v[i], n[i]) for i in range(3)}) > 1))
    m, n = order_by_ratio(m, n)
    return validate(m, n, theorem_mode=theorem_mode)


rationals = st.fractions(min_value=-30, max_value=30, max_denominator=50)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(test_acceptance.RESULTS):
        ok, detail = test_acceptance.RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}" + ("" if ok else f"  ({detail})"))
