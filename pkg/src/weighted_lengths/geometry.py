"""Cross-sections of the factorization simplex and the limiting triangular density.

``||r||`` cancels from every quantity exposed here, so all results are exact
rationals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import DirectionData, WeightSystem, direction_data


@dataclass(frozen=True)
class SegmentEndpoints:
    """Where the line ``{x : m.x = t, n.x = 1}`` meets the three coordinate planes.

    ``p1`` (``x1 = 0``) is None when ``rho1 == 0`` and ``p3`` (``x3 = 0``) is
    None when ``rho3 == 0``. The ``*_valid`` flags say whether the point lies
    in the closed nonnegative octant.
    """

    t: Fraction
    p1: Optional[tuple]
    p2: tuple
    p3: Optional[tuple]
    p1_valid: bool
    p2_valid: bool
    p3_valid: bool

    def valid_points(self):
        pts = [(self.p1, self.p1_valid), (self.p2, self.p2_valid), (self.p3, self.p3_valid)]
        return [p for p, ok in pts if ok]


@dataclass(frozen=True)
class TriangleDensity:
    """Piecewise-linear density on ``[m3/n3, m1/n1]`` with its peak at ``m2/n2``."""

    ws: WeightSystem
    dd: DirectionData

    @classmethod
    def from_weights(cls, ws: WeightSystem, dd: Optional[DirectionData] = None) -> "TriangleDensity":
        return cls(ws, dd or direction_data(ws))

    @property
    def t1(self) -> Fraction:
        return Fraction(self.ws.m[0], self.ws.n[0])

    @property
    def t2(self) -> Fraction:
        return Fraction(self.ws.m[1], self.ws.n[1])

    @property
    def t3(self) -> Fraction:
        return Fraction(self.ws.m[2], self.ws.n[2])

    @property
    def scale(self) -> Fraction:
        n1, n2, n3 = self.ws.n
        return Fraction(2 * n1 * n2 * n3, self.dd.rho2)

    @property
    def peak(self) -> Fraction:
        return self.scale / self.ws.n[1]

    def _left(self, t: Fraction) -> Fraction:
        # (n3 t - m3) / rho1, before the common 1/rho2 factor
        return (self.ws.n[2] * t - self.ws.m[2]) / self.dd.rho1

    def _right(self, t: Fraction) -> Fraction:
        return (self.ws.m[0] - self.ws.n[0] * t) / self.dd.rho3

    def shape(self, t) -> Fraction:
        """Half-open piecewise form: ``[t3, t2)`` left branch, ``[t2, t1)`` right branch."""
        t = Fraction(t)
        if t < self.t3 or t >= self.t1:
            return Fraction(0)
        if t < self.t2:
            return self._left(t)
        return self._right(t)

    def __call__(self, t) -> Fraction:
        return self.scale * self.shape(t)

    def integrate(self, alpha=None, beta=None) -> Fraction:
        """Exact ``∫ F`` over ``[alpha, beta]``; None means an infinite endpoint."""
        a = self.t3 if alpha is None else max(Fraction(alpha), self.t3)
        b = self.t1 if beta is None else min(Fraction(beta), self.t1)
        if alpha is not None and beta is not None and Fraction(alpha) > Fraction(beta):
            raise ValueError("need alpha <= beta")
        (m1, _, m3), (n1, _, n3) = self.ws.m, self.ws.n
        total = Fraction(0)
        lo, hi = max(a, self.t3), min(b, self.t2)
        if self.dd.rho1 and lo < hi:
            total += (hi - lo) * (n3 * (lo + hi) / 2 - m3) / self.dd.rho1
        lo, hi = max(a, self.t2), min(b, self.t1)
        if self.dd.rho3 and lo < hi:
            total += (hi - lo) * (m1 - n1 * (lo + hi) / 2) / self.dd.rho3
        return self.scale * total

    @property
    def lipschitz(self) -> Fraction:
        """Lipschitz constant of ``l(t, 1)/||r||`` (sides with vanishing rho omitted)."""
        slopes = []
        if self.dd.rho1:
            slopes.append(Fraction(self.ws.n[2], self.dd.rho1))
        if self.dd.rho3:
            slopes.append(Fraction(self.ws.n[0], self.dd.rho3))
        return max(slopes) / self.dd.rho2


def segment_endpoints(ws: WeightSystem, t, dd: Optional[DirectionData] = None) -> SegmentEndpoints:
    dd = dd or direction_data(ws)
    t = Fraction(t)
    (m1, m2, m3), (n1, n2, n3) = ws.m, ws.n
    t1, t2, t3 = Fraction(m1, n1), Fraction(m2, n2), Fraction(m3, n3)
    p1 = p3 = None
    if dd.rho1:
        p1 = (Fraction(0), (n3 * t - m3) / dd.rho1, (m2 - n2 * t) / dd.rho1)
    p2 = ((n3 * t - m3) / dd.rho2, Fraction(0), (m1 - n1 * t) / dd.rho2)
    if dd.rho3:
        p3 = ((n2 * t - m2) / dd.rho3, (m1 - n1 * t) / dd.rho3, Fraction(0))
    return SegmentEndpoints(
        t,
        p1,
        p2,
        p3,
        p1 is not None and t3 <= t <= t2,
        t3 <= t <= t1,
        p3 is not None and t2 <= t <= t1,
    )


def normalized_segment_length(ws: WeightSystem, dd: DirectionData, t) -> Fraction:
    """``l(t, 1) / ||r||``: the closed-interval length of the cross-section at ``t``.

    Unlike :func:`density_F` this is the true geometric length, so on a
    right-degenerate system (``rho3 == 0``) it is nonzero at ``t = m1/n1``.
    """
    t = Fraction(t)
    (m1, m2, m3), (n1, n2, n3) = ws.m, ws.n
    t1, t2, t3 = Fraction(m1, n1), Fraction(m2, n2), Fraction(m3, n3)
    if t < t3 or t > t1:
        return Fraction(0)
    values = []
    if dd.rho1 and t <= t2:
        values.append((n3 * t - m3) / (dd.rho1 * dd.rho2))
    if dd.rho3 and t >= t2:
        values.append((m1 - n1 * t) / (dd.rho2 * dd.rho3))
    return max(values, default=Fraction(0))


def density_F(ws: WeightSystem, t, dd: Optional[DirectionData] = None) -> Fraction:
    return TriangleDensity.from_weights(ws, dd)(t)


def integrate_F(ws: WeightSystem, alpha, beta, dd: Optional[DirectionData] = None) -> Fraction:
    if Fraction(alpha) > Fraction(beta):
        raise ValueError("need alpha <= beta")
    return TriangleDensity.from_weights(ws, dd).integrate(alpha, beta)
