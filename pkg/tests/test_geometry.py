from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weighted_lengths.core import direction_data, dot, validate
from weighted_lengths.geometry import (
    TriangleDensity,
    density_F,
    integrate_F,
    normalized_segment_length,
    segment_endpoints,
)

from .conftest import rationals, weight_systems
from .oracles import symbolic_integral

BOXES = validate((20, 9, 6), (1, 1, 1), theorem_mode=False)


def test_endpoints_at_peak_of_boxes():
    ep = segment_endpoints(BOXES, 9)
    assert ep.p1 == (0, 1, 0)
    assert ep.p2 == (Fraction(3, 14), 0, Fraction(11, 14))
    assert ep.p3 == (0, 1, 0)
    assert ep.p1_valid and ep.p2_valid and ep.p3_valid
    for p in ep.valid_points():
        assert dot(BOXES.m, p) == 9 and sum(p) == 1


def test_endpoints_outside_support():
    ep = segment_endpoints(BOXES, 5)
    assert ep.valid_points() == []


def test_endpoints_degenerate_left():
    ws = validate((1, 0, 0), (6, 9, 20))
    ep = segment_endpoints(ws, Fraction(1, 12))
    assert ep.p1 is None and not ep.p1_valid


def _sq(v):
    return sum(x * x for x in v)


@given(weight_systems(), rationals)
def test_endpoint_distance_matches_length(ws, t):
    dd = direction_data(ws)
    ep = segment_endpoints(ws, t, dd)
    r2 = _sq(dd.r)
    for p in ep.valid_points():
        assert dot(ws.m, p) == t and dot(ws.n, p) == 1
    if ep.p1_valid and ep.p2_valid:
        diff = [a - b for a, b in zip(ep.p1, ep.p2)]
        assert _sq(diff) == ((ws.n[2] * t - ws.m[2]) / (dd.rho1 * dd.rho2)) ** 2 * r2
    if ep.p2_valid and ep.p3_valid:
        diff = [a - b for a, b in zip(ep.p2, ep.p3)]
        assert _sq(diff) == ((ws.m[0] - ws.n[0] * t) / (dd.rho2 * dd.rho3)) ** 2 * r2


def test_normalized_length_values():
    dd = direction_data(BOXES)
    assert normalized_segment_length(BOXES, dd, 9) == Fraction(1, 14)
    assert normalized_segment_length(BOXES, dd, 5) == 0
    assert normalized_segment_length(BOXES, dd, 21) == 0


@given(weight_systems())
def test_normalized_length_peak_and_area(ws):
    dd = direction_data(ws)
    tri = TriangleDensity(ws, dd)
    assert normalized_segment_length(ws, dd, tri.t2) == Fraction(1, ws.n[1] * dd.rho2)
    n1, n2, n3 = ws.n
    assert tri.integrate() / (2 * n1 * n2 * n3) == Fraction(1, 2 * n1 * n2 * n3)


def test_density_values():
    assert density_F(BOXES, 9) == Fraction(1, 7)
    assert density_F(BOXES, 6) == 0
    assert density_F(BOXES, 20) == 0


def test_density_branches_agree_at_peak(instance):
    dd = direction_data(instance)
    tri = TriangleDensity(instance, dd)
    if dd.rho1 and dd.rho3:
        assert tri._left(tri.t2) == tri._right(tri.t2)
    n1, n2, n3 = instance.n
    assert 2 * n1 * n2 * n3 * normalized_segment_length(instance, dd, tri.t2) == tri.peak
    if dd.rho3:
        assert tri(tri.t2) == tri.peak
    else:
        # half-open display: F vanishes from t1 = t2 onwards
        assert tri(tri.t2) == 0
        assert tri(tri.t2 - Fraction(1, 10**9)) < tri.peak


def test_left_degenerate_jumps_to_peak():
    ws = validate((1, 0, 0), (6, 9, 20))
    tri = TriangleDensity.from_weights(ws)
    assert tri.t3 == tri.t2 == 0
    assert tri(Fraction(-1, 10**9)) == 0
    assert tri(0) == tri.peak


def test_integrate_table_values():
    assert integrate_F(BOXES, 8, 15) == Fraction(2401, 3234)
    assert integrate_F(BOXES, 7, Fraction("7.1")) == Fraction(1, 200)
    assert integrate_F(BOXES, 6, 20) == 1


@pytest.mark.parametrize("alpha, beta", [(8, 15), (7, Fraction(71, 10)), (-3, 40), (6, 9), (Fraction(19, 2), 20)])
def test_integrate_matches_sympy(alpha, beta):
    assert integrate_F(BOXES, alpha, beta) == symbolic_integral(BOXES.m, BOXES.n, alpha, beta)


def test_integrate_matches_sympy_on_instances(instance):
    tri = TriangleDensity.from_weights(instance)
    a = tri.t3 - 1
    b = (tri.t2 + tri.t1) / 2
    assert tri.integrate(a, b) == symbolic_integral(instance.m, instance.n, a, b)
    assert tri.integrate(tri.t3, tri.t1) == 1


@given(weight_systems(), st.lists(rationals, min_size=1, max_size=20))
def test_density_nonnegative_and_monotone(ws, ts):
    tri = TriangleDensity.from_weights(ws)
    ts = sorted(set(ts))
    vals = [tri(t) for t in ts]
    assert all(v >= 0 for v in vals)
    rising = [(t, v) for t, v in zip(ts, vals) if tri.t3 <= t < tri.t2]
    falling = [(t, v) for t, v in zip(ts, vals) if tri.t2 <= t <= tri.t1]
    assert all(a[1] <= b[1] for a, b in zip(rising, rising[1:]))
    assert all(a[1] >= b[1] for a, b in zip(falling, falling[1:]))


@given(weight_systems(), rationals, rationals, rationals)
def test_integral_additive(ws, a, b, c):
    a, b, c = sorted((a, b, c))
    assert integrate_F(ws, a, c) == integrate_F(ws, a, b) + integrate_F(ws, b, c)


@given(weight_systems(), st.fractions(0, 1, max_denominator=200), st.fractions(0, 1, max_denominator=200))
@settings(max_examples=200)
def test_lipschitz(ws, u, v):
    dd = direction_data(ws)
    tri = TriangleDensity(ws, dd)
    t, s = (tri.t3 + x * (tri.t1 - tri.t3) for x in (u, v))
    n1, n2, n3 = ws.n
    # use the closed-interval length; the half-open density jumps at a degenerate right end
    f = lambda x: 2 * n1 * n2 * n3 * normalized_segment_length(ws, dd, x)
    assert abs(f(t) - f(s)) <= 2 * n1 * n2 * n3 * tri.lipschitz * abs(t - s)


def test_integrate_rejects_reversed():
    with pytest.raises(ValueError):
        integrate_F(BOXES, 3, 2)
