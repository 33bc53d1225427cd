"""Explicit error bounds for the windowed length count versus the limiting density."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import DirectionData, WeightSystem, direction_data
from .enumeration import count_in_window
from .geometry import TriangleDensity


@dataclass(frozen=True)
class BoundInputs:
    n: int
    alpha: Fraction
    beta: Fraction
    d: int
    C1: Fraction
    C2: Fraction


def bound_inputs(ws: WeightSystem, dd: DirectionData, n: int, alpha, beta) -> BoundInputs:
    tri = TriangleDensity(ws, dd)
    return BoundInputs(
        n, Fraction(alpha), Fraction(beta), dd.d, Fraction(1, ws.n[1] * dd.rho2), tri.lipschitz
    )


def _check(n, alpha, beta):
    if n <= 0:
        raise ValueError("n must be positive")
    if Fraction(alpha) > Fraction(beta):
        raise ValueError("need alpha <= beta")


def theorem_bound(ws: WeightSystem, dd: DirectionData, n: int, alpha, beta) -> Fraction:
    """The simple bound: depends on the generators and ``d`` only."""
    _check(n, alpha, beta)
    n1, n2, n3 = ws.n
    d = dd.d
    width = Fraction(beta) - Fraction(alpha) + Fraction(2 * d, n)
    inner = Fraction(5 * d, n2) + Fraction(2 * d, n) + width * (1 + d * max(n1, n3))
    return Fraction(2 * n1 * n2 * n3, n) * inner


def refined_bound(ws: WeightSystem, dd: DirectionData, n: int, alpha, beta) -> Fraction:
    """The sharper bound using ``C1 = 1/(n2 rho2)`` and the Lipschitz constant ``C2``."""
    _check(n, alpha, beta)
    b = bound_inputs(ws, dd, n, alpha, beta)
    n1, n2, n3 = ws.n
    width = b.beta - b.alpha + Fraction(2 * b.d, n)
    inner = width * (1 + b.d * b.C2) + b.d * (5 * b.C1 + Fraction(2, n))
    return 2 * n1 * n2 * n3 * inner / n


@dataclass(frozen=True)
class BoundReport:
    n: int
    alpha: Fraction
    beta: Fraction
    count: int
    scaled_mass: Fraction
    integral: Fraction
    theorem_bound: Fraction
    refined_bound: Fraction

    @property
    def error(self) -> Fraction:
        return abs(self.scaled_mass - self.integral)

    @property
    def theorem_ok(self) -> bool:
        return self.error <= self.theorem_bound

    @property
    def refined_ok(self) -> bool:
        return self.error <= self.refined_bound


def verify_bound(ws: WeightSystem, dd: Optional[DirectionData], n: int, alpha, beta) -> BoundReport:
    """Compare the scaled window mass with the exact integral and both bounds.

    The window is clipped to the support ``[m3/n3, m1/n1]`` first; neither the
    count nor the integral changes, but both bounds shrink.
    """
    dd = dd or direction_data(ws)
    alpha, beta = Fraction(alpha), Fraction(beta)
    if n <= 0:
        raise ValueError("n must be positive")
    if not alpha < beta:
        raise ValueError("need alpha < beta")
    tri = TriangleDensity(ws, dd)
    a, b = max(alpha, tri.t3), min(beta, tri.t1)
    if a > b:
        # window misses the support entirely; evaluate bounds on an empty width
        a = b = min(max(alpha, tri.t3), tri.t1)
        count = 0
    else:
        count = count_in_window(ws, n, alpha, beta, dd)
    n1, n2, n3 = ws.n
    return BoundReport(
        n,
        a,
        b,
        count,
        Fraction(2 * n1 * n2 * n3 * count, n * n),
        tri.integrate(a, b),
        theorem_bound(ws, dd, n, a, b),
        refined_bound(ws, dd, n, a, b),
    )
