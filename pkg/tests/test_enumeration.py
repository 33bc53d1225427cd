from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weighted_lengths.core import WeightSystem, direction_data, residue_class, validate
from weighted_lengths.enumeration import (
    Factorization,
    LineCounter,
    count_in_window,
    count_on_line,
    enumerate_factorizations,
    length_multiset,
    scaled_histogram,
    support_range,
    weighted_length,
)
from weighted_lengths.geometry import normalized_segment_length

from .conftest import rationals, weight_systems
from .oracles import brute_counts, stars_and_bars

MCNUGGET = validate((1, 1, 1), (6, 9, 20))
BOXES = validate((20, 9, 6), (1, 1, 1), theorem_mode=False)


def test_enumerate_small():
    assert enumerate_factorizations(MCNUGGET, 0) == [Factorization(0, 0, 0)]
    assert enumerate_factorizations(MCNUGGET, 7) == []
    assert enumerate_factorizations(MCNUGGET, 44) == [
        Factorization(4, 0, 1),
        Factorization(1, 2, 1),
    ]


def test_enumeration_order_is_x3_outer():
    xs = enumerate_factorizations(BOXES, 3)
    assert [(x.x3, x.x2) for x in xs] == sorted((x.x3, x.x2) for x in xs)


@pytest.mark.parametrize("x, m, expected", [((2, 3, 4), (1, 1, 1), 9), ((0, 0, 0), (20, 9, 6), 0), ((1, 1, 1), (4, 7, 2), 13)])
def test_weighted_length(x, m, expected):
    assert weighted_length(WeightSystem(m, (1, 1, 1)), x) == expected


def test_factorization_count_asymptotic():
    ws = validate((4, 7, 2), (9, 20, 6))
    n = 10**5
    total = length_multiset(ws, n).total
    assert abs(total / (n * n / 2160) - 1) < 1e-3


def test_box_multiset_total_and_support():
    lm = length_multiset(BOXES, 100)
    assert lm.total == stars_and_bars(100) == 5151
    assert 600 <= lm.min and lm.max <= 2000


def test_multiset_matches_enumeration(instance):
    for n in (0, 1, 17, 60, 143):
        xs = enumerate_factorizations(instance, n)
        lm = length_multiset(instance, n)
        assert lm.total == len(xs)
        assert lm.counts == dict(sorted(brute_counts(instance.m, instance.n, n).items()))


def test_multiset_support_and_residues(instance):
    dd = direction_data(instance)
    for n in (50, 211):
        lm = length_multiset(instance, n)
        lo, hi = support_range(instance, n)
        assert lo <= lm.min and lm.max <= hi
        if instance.coprime:
            rc = residue_class(instance, dd, n)
            assert all(m in rc for m in lm.counts)


def test_line_count_matches_brute_force(instance):
    if not instance.coprime:
        pytest.skip("line method needs coprime generators")
    dd = direction_data(instance)
    for n in range(0, 121, 3):
        lc = LineCounter(instance, dd, n)
        truth = brute_counts(instance.m, instance.n, n)
        lo, hi = support_range(instance, n)
        for m in range(lo - 3, hi + 4):
            assert lc.count(m) == truth.get(m, 0), (n, m)


def test_count_on_line_wrong_residue_is_empty():
    ws = validate((3, 9, 4), (5, 17, 8))
    dd = direction_data(ws)
    c = residue_class(ws, dd, 100).c
    seg = count_on_line(ws, dd, c + 1 + 50, 100)
    assert seg.count == 0 and seg.z is None


@given(weight_systems(), st.integers(0, 150), st.data())
@settings(max_examples=150, deadline=None)
def test_line_segment_bracket(ws, n, data):
    dd = direction_data(ws)
    lo, hi = support_range(ws, n)
    m = data.draw(st.integers(lo - 2, hi + 2))
    seg = count_on_line(ws, dd, m, n)
    if seg.z is None:
        return
    assert seg.count - 1 <= seg.length <= seg.count + 1
    # (s_hi - s_lo) is the segment length measured in units of ||r||/d
    if n > 0:
        assert seg.length == dd.d * n * normalized_segment_length(ws, dd, Fraction(m, n))


def test_window_mcnugget_boxes():
    dd = direction_data(BOXES)
    assert count_in_window(BOXES, 100, 8, 15, dd) == 3785
    assert count_in_window(BOXES, 100, 8, 15) == 3785  # multiset route
    assert count_in_window(BOXES, 1000, 8, 15, dd) == 371942
    assert sum(count_on_line(BOXES, dd, m, 100).count for m in range(800, 1501)) == 3785


def test_window_outside_support():
    dd = direction_data(BOXES)
    assert count_in_window(BOXES, 100, 1, 5, dd) == 0
    assert count_in_window(BOXES, 100, 21, 30, dd) == 0


@given(weight_systems(), st.integers(1, 200), rationals, rationals, rationals)
@settings(max_examples=100, deadline=None)
def test_window_additivity(ws, n, a, b, c):
    a, b, c = sorted((a, b, c))
    if not a < c:
        return
    dd = direction_data(ws)
    # split strictly between consecutive integers
    split = Fraction(2 * ((b * n).__floor__()) + 1, 2 * n)
    if not a < split < c:
        return
    whole = count_in_window(ws, n, a, c, dd)
    assert whole == count_in_window(ws, n, a, split, dd) + count_in_window(ws, n, split, c, dd)
    assert whole == count_in_window(ws, n, a, c)


def test_scaled_histogram_gaps_for_d2():
    ws = validate((3, 9, 4), (5, 17, 8))
    dd = direction_data(ws)
    rows = scaled_histogram(ws, dd, 1000)
    c = residue_class(ws, dd, 1000).c
    for pos, value in rows:
        m = pos * 1000
        if (m - c) % 2:
            assert value == 0
    assert any(v > 0 for _, v in rows)


def test_scaled_histogram_peak():
    dd = direction_data(BOXES)
    rows = dict(scaled_histogram(BOXES, dd, 100))
    assert abs(rows[Fraction(9)] - Fraction(1, 7)) <= Fraction(2, 100)


def test_scaled_histogram_tracks_density(instance):
    dd = direction_data(instance)
    n1, n2, n3 = instance.n
    N = 2 * n1 * n2 * n3
    for n in (97, 240):
        tol = Fraction(N, dd.d * n)
        for pos, value in scaled_histogram(instance, dd, n):
            if value:
                assert abs(value - N * normalized_segment_length(instance, dd, pos)) <= tol
