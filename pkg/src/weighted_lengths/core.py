"""Problem instances, direction data, residue classes and explicit integer points.

Everything here is integer arithmetic. Ratios ``m_i/n_i`` are compared by
cross-multiplication, never as floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Tuple

from .errors import (
    AllRatiosEqual,
    GeneratorsNotCoprime,
    GeneratorsNotDistinct,
    NonPositiveGenerator,
    RatioOrderViolated,
    WidthOverflow,
)

Triple = Tuple[int, int, int]

INT128_MAX = 2**127 - 1


def dot(u, v) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u, v) -> Triple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def egcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def bezout3(a: int, b: int, c: int) -> Tuple[int, Triple]:
    """Coefficients ``(x, y, z)`` with ``a*x + b*y + c*z == gcd(a, b, c)``."""
    g1, x1, y1 = egcd(a, b)
    g, u, v = egcd(g1, c)
    return g, (u * x1, u * y1, v)


@dataclass(frozen=True)
class WeightSystem:
    """Weights ``m`` and generators ``n`` of a three-generator semigroup.

    Construct through :func:`validate` to get the ratio-ordering guarantees
    that the density and bound code relies on. Direct construction is
    allowed for unordered systems (enumeration only).
    """

    m: Triple
    n: Triple

    @property
    def coprime(self) -> bool:
        return gcd(*self.n) == 1

    def ratio_cmp(self, i: int, j: int) -> int:
        """Sign of ``m_i/n_i - m_j/n_j``."""
        diff = self.m[i] * self.n[j] - self.m[j] * self.n[i]
        return (diff > 0) - (diff < 0)

    def check_width(self, n: int = 1) -> None:
        """Refuse inputs whose products ``m_i * n_j * n**2`` leave 128-bit range."""
        big = max(abs(x) for x in self.m + self.n) or 1
        scale = max(abs(n), 1)
        if big * big * scale * scale > INT128_MAX:
            raise WidthOverflow(
                f"inputs m={self.m}, n={self.n}, n={n} exceed the 128-bit working width"
            )


def validate(raw_m, raw_n, theorem_mode: bool = True) -> WeightSystem:
    m = tuple(int(x) for x in raw_m)
    n = tuple(int(x) for x in raw_n)
    if len(m) != 3 or len(n) != 3:
        raise ValueError("weights and generators must be triples")
    if any(x <= 0 for x in n):
        raise NonPositiveGenerator(f"generators must be positive, got {n}")
    ws = WeightSystem(m, n)
    ws.check_width()
    if ws.ratio_cmp(2, 1) > 0 or ws.ratio_cmp(1, 0) > 0:
        raise RatioOrderViolated(
            f"need m3/n3 <= m2/n2 <= m1/n1, got "
            f"{m[0]}/{n[0]}, {m[1]}/{n[1]}, {m[2]}/{n[2]}"
        )
    if ws.ratio_cmp(0, 2) == 0:
        raise AllRatiosEqual("all three ratios m_i/n_i coincide")
    if theorem_mode:
        if len(set(n)) != 3:
            raise GeneratorsNotDistinct(f"generators must be distinct, got {n}")
        if gcd(*n) != 1:
            raise GeneratorsNotCoprime(f"gcd{n} = {gcd(*n)} != 1")
    return ws


@dataclass(frozen=True)
class DirectionData:
    rho1: int
    rho2: int
    rho3: int
    d: int

    @property
    def r(self) -> Triple:
        return (self.rho1, -self.rho2, self.rho3)

    @property
    def r_primitive(self) -> Triple:
        return tuple(x // self.d for x in self.r)

    @property
    def degenerate_left(self) -> bool:
        return self.rho1 == 0

    @property
    def degenerate_right(self) -> bool:
        return self.rho3 == 0


def direction_data(ws: WeightSystem) -> DirectionData:
    (m1, m2, m3), (n1, n2, n3) = ws.m, ws.n
    rho1 = m2 * n3 - m3 * n2
    rho2 = m1 * n3 - m3 * n1
    rho3 = m1 * n2 - m2 * n1
    dd = DirectionData(rho1, rho2, rho3, gcd(rho1, rho2, rho3))
    assert rho1 >= 0 and rho2 > 0 and rho3 >= 0, "weight system is not validated"
    assert rho1 or rho3
    assert cross(ws.m, ws.n) == dd.r
    assert dot(ws.m, dd.r) == 0 and dot(ws.n, dd.r) == 0
    assert gcd(*dd.r_primitive) == 1
    return dd


@dataclass(frozen=True)
class ResidueClass:
    """Populated residue ``c`` of weighted lengths modulo ``d`` for element ``n``."""

    n: int
    c: int
    d: int

    def __contains__(self, m: int) -> bool:
        return (m - self.c) % self.d == 0


def _require_coprime(ws: WeightSystem) -> None:
    if not ws.coprime:
        raise GeneratorsNotCoprime(f"gcd{ws.n} = {gcd(*ws.n)} != 1")


def generator_bezout(ws: WeightSystem) -> Triple:
    """Integer ``a`` with ``a . n_gens == 1``."""
    _require_coprime(ws)
    return bezout3(*ws.n)[1]


def residue_class(ws: WeightSystem, dd: DirectionData, n: int, a: Optional[Triple] = None) -> ResidueClass:
    """Residue class of ``m`` for which ``A x = (m, n)`` has integer solutions.

    ``a`` overrides the Bezout coefficients for the generators; any valid
    choice gives the same class.
    """
    if a is None:
        a = generator_bezout(ws)
    else:
        _require_coprime(ws)
        if dot(a, ws.n) != 1:
            raise ValueError(f"{a} is not a Bezout vector for {ws.n}")
    return ResidueClass(n, (dot(a, ws.m) * n) % dd.d, dd.d)


@dataclass(frozen=True)
class IntegerPointWitness:
    z: Triple
    v: Triple
    w: Triple


def integer_point(ws: WeightSystem, dd: DirectionData, m: int, n: int) -> Optional[IntegerPointWitness]:
    """An integer (possibly negative) ``z`` with ``m.z == m`` and ``n.z == n``, or None."""
    _require_coprime(ws)
    a = generator_bezout(ws)
    z0 = tuple(ai * n for ai in a)
    s = dot(ws.m, z0)
    if (m - s) % dd.d:
        return None
    _, v = bezout3(*dd.r)
    w = cross(ws.n, v)
    assert dot(ws.n, w) == 0 and dot(ws.m, w) == dd.d
    k = (m - s) // dd.d
    z = tuple(z0[i] + k * w[i] for i in range(3))
    assert dot(ws.m, z) == m and dot(ws.n, z) == n
    return IntegerPointWitness(z, v, w)
