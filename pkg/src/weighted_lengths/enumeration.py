"""Factorization sets, length multisets and exact per-value counts.

Two independent routes to ``|Z(m, n)|``:

* brute force, by walking every factorization of ``n`` (:func:`length_multiset`);
* the lattice-line method, which intersects the integer line of solutions of
  ``A x = (m, n)`` with the nonnegative octant (:func:`count_on_line`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

import numpy as np

from .core import (
    DirectionData,
    Triple,
    WeightSystem,
    bezout3,
    cross,
    dot,
    generator_bezout,
    residue_class,
)


class Factorization(NamedTuple):
    x1: int
    x2: int
    x3: int


def iter_factorizations(ws: WeightSystem, n: int) -> Iterator[Factorization]:
    n1, n2, n3 = ws.n
    for x3 in range(n // n3 + 1):
        rest = n - n3 * x3
        for x2 in range(rest // n2 + 1):
            q, r = divmod(rest - n2 * x2, n1)
            if r == 0:
                yield Factorization(q, x2, x3)


def enumerate_factorizations(ws: WeightSystem, n: int) -> List[Factorization]:
    """All of ``Z_S(n)``, ordered with ``x3`` outermost and ``x2`` inner."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(iter_factorizations(ws, n))


def weighted_length(ws: WeightSystem, x) -> int:
    return dot(ws.m, x)


def support_range(ws: WeightSystem, n: int) -> Tuple[int, int]:
    """Integer range ``[lo, hi]`` that contains every weighted length of ``n``."""
    num_lo = min(range(3), key=lambda i: Fraction(ws.m[i], ws.n[i]))
    num_hi = max(range(3), key=lambda i: Fraction(ws.m[i], ws.n[i]))
    lo = -((-ws.m[num_lo] * n) // ws.n[num_lo])
    hi = (ws.m[num_hi] * n) // ws.n[num_hi]
    return lo, hi


@dataclass
class LengthMultiset:
    """Multiplicities of weighted lengths over all factorizations of ``n``."""

    n: int
    counts: Dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, m: int) -> int:
        return self.counts.get(m, 0)

    def items(self):
        return self.counts.items()

    @property
    def min(self) -> int:
        return next(iter(self.counts))

    @property
    def max(self) -> int:
        return next(reversed(self.counts))


_INT64_SAFE = 2**62


def length_multiset(ws: WeightSystem, n: int) -> LengthMultiset:
    """Brute-force ``Lambda[[n]]``.

    For a fixed ``x3`` the admissible ``x2`` form an arithmetic progression
    (those with ``n1 | n - n3*x3 - n2*x2``), so each row of the enumeration
    is streamed as a numpy range and binned; the factorization list itself is
    never built.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    ws.check_width(n)
    (m1, m2, m3), (n1, n2, n3) = ws.m, ws.n
    lo, hi = support_range(ws, n)
    if max(abs(lo), abs(hi)) + max(abs(x) for x in ws.m) * (n + 1) >= _INT64_SAFE:
        return _length_multiset_py(ws, n)

    bins = np.zeros(hi - lo + 1, dtype=np.int64)
    g = gcd(n1, n2)
    step = n1 // g
    # x2 ≡ rest * inv(n2/g) (mod n1/g) whenever g | rest
    inv = pow(n2 // g, -1, step) if step > 1 else 0
    for x3 in range(n // n3 + 1):
        rest = n - n3 * x3
        if rest % g:
            continue
        start = ((rest // g) * inv) % step if step > 1 else 0
        top = rest // n2
        if start > top:
            continue
        x2 = np.arange(start, top + 1, step, dtype=np.int64)
        x1 = (rest - n2 * x2) // n1
        lam = m1 * x1 + m2 * x2 + m3 * x3
        bins += np.bincount(lam - lo, minlength=bins.size)
    nz = np.flatnonzero(bins)
    return LengthMultiset(n, {int(lo + i): int(bins[i]) for i in nz})


def _length_multiset_py(ws: WeightSystem, n: int) -> LengthMultiset:
    counts: Dict[int, int] = {}
    for x in iter_factorizations(ws, n):
        lam = dot(ws.m, x)
        counts[lam] = counts.get(lam, 0) + 1
    return LengthMultiset(n, dict(sorted(counts.items())))


@dataclass(frozen=True)
class LatticeSegment:
    """Feasible parameters ``s`` with ``z + s * r/d`` in the nonnegative octant.

    ``s_lo``/``s_hi`` are None when there is no integer point at all.
    ``blocked`` marks a coordinate that is constant along the line and negative,
    which empties the segment whatever ``s`` is.
    """

    z: Optional[Triple]
    s_lo: Optional[Fraction]
    s_hi: Optional[Fraction]
    count: int
    blocked: bool = False

    @property
    def length(self) -> Fraction:
        """Width ``s_hi - s_lo`` of the real feasible interval (0 when empty)."""
        if self.z is None or self.blocked or self.s_hi < self.s_lo:
            return Fraction(0)
        return self.s_hi - self.s_lo


class LineCounter:
    """Counts ``|Z(m, n)|`` for fixed ``n`` and many ``m`` by the lattice-line method.

    With ``z0`` any integer point on ``n . z = n`` and ``w = n x v`` where
    ``r . v = d``, every integer solution of ``A z = (m, n)`` is
    ``z0 + ((m - s)/d) w + k r/d`` with ``s = m . z0`` and ``k`` integer.
    """

    def __init__(self, ws: WeightSystem, dd: DirectionData, n: int):
        self.ws, self.dd, self.n = ws, dd, n
        a = generator_bezout(ws)
        self.z0 = tuple(ai * n for ai in a)
        self.s = dot(ws.m, self.z0)
        self.c = residue_class(ws, dd, n, a).c
        self.w = cross(ws.n, bezout3(*dd.r)[1])
        self.dir = dd.r_primitive

    def witness(self, m: int) -> Optional[Triple]:
        if (m - self.s) % self.dd.d:
            return None
        k = (m - self.s) // self.dd.d
        return tuple(self.z0[i] + k * self.w[i] for i in range(3))

    def count(self, m: int) -> int:
        z = self.witness(m)
        if z is None:
            return 0
        lo = hi = None
        for zi, ri in zip(z, self.dir):
            if ri > 0:
                b = -(zi // ri)  # ceil(-zi/ri)
                lo = b if lo is None or b > lo else lo
            elif ri < 0:
                b = zi // -ri  # floor(zi/|ri|)
                hi = b if hi is None or b < hi else hi
            elif zi < 0:
                return 0
        return max(0, hi - lo + 1)

    def segment(self, m: int) -> LatticeSegment:
        z = self.witness(m)
        if z is None:
            return LatticeSegment(None, None, None, 0)
        lo = hi = None
        empty = False
        for zi, ri in zip(z, self.dir):
            if ri == 0:
                empty |= zi < 0
                continue
            b = Fraction(-zi, ri)
            if ri > 0:
                lo = b if lo is None else max(lo, b)
            else:
                hi = b if hi is None else min(hi, b)
        count = 0 if empty else max(0, floor(hi) - ceil(lo) + 1)
        return LatticeSegment(z, lo, hi, count, empty)


def count_on_line(ws: WeightSystem, dd: DirectionData, m: int, n: int) -> LatticeSegment:
    return LineCounter(ws, dd, n).segment(m)


def _window_range(ws, n, alpha, beta) -> Tuple[int, int]:
    alpha, beta = Fraction(alpha), Fraction(beta)
    lo, hi = support_range(ws, n)
    return max(ceil(alpha * n), lo), min(floor(beta * n), hi)


def count_in_window(ws: WeightSystem, n: int, alpha, beta, dd: Optional[DirectionData] = None) -> int:
    """``|Lambda[[n]] ∩ [alpha*n, beta*n]|`` for exact rational ``alpha < beta``."""
    if not Fraction(alpha) < Fraction(beta):
        raise ValueError("need alpha < beta")
    ws.check_width(n)
    lo, hi = _window_range(ws, n, alpha, beta)
    if lo > hi:
        return 0
    if dd is not None and ws.coprime:
        lc = LineCounter(ws, dd, n)
        d = dd.d
        first = lo + (lc.c - lo) % d
        return sum(lc.count(m) for m in range(first, hi + 1, d))
    lm = length_multiset(ws, n)
    return sum(k for m, k in lm.items() if lo <= m <= hi)


def scaled_histogram(ws: WeightSystem, dd: DirectionData, n: int) -> List[Tuple[Fraction, Fraction]]:
    """Rows ``(m/n, |Z(m, n)| * 2 n1 n2 n3 / (d n))`` over the support range."""
    if n <= 0:
        raise ValueError("n must be positive")
    scale = Fraction(2 * ws.n[0] * ws.n[1] * ws.n[2], dd.d * n)
    lo, hi = support_range(ws, n)
    if ws.coprime:
        lc = LineCounter(ws, dd, n)
        get = lc.count
    else:
        get = length_multiset(ws, n).__getitem__
    return [(Fraction(m, n), get(m) * scale) for m in range(lo, hi + 1)]
