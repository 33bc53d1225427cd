"""Empirical statistics of a length multiset and their large-n predictions."""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from typing import Union

from .core import WeightSystem
from .enumeration import LengthMultiset
from .errors import EmptyMultiset

Number = Union[int, float, Fraction]


def round_half_even(x: Number, places: int) -> Decimal:
    """Round ``x`` to ``places`` decimals, ties to even. Exact for rationals."""
    q = Decimal(1).scaleb(-places)
    if isinstance(x, float):
        return Decimal(x).quantize(q, rounding=ROUND_HALF_EVEN)
    scaled = Fraction(x) * 10**places
    return (Decimal(round(scaled)) * q).quantize(q)


@dataclass(frozen=True)
class StatsReport:
    kind: str  # "empirical" or "predicted"
    n: int
    mean: Fraction
    variance: Fraction
    median: Number
    mode: Number
    min: Number
    max: Number

    @property
    def stdev(self) -> float:
        return math.sqrt(self.variance)

    def rounded(self, places: int = 2) -> dict:
        return {
            "mean": round_half_even(self.mean, places),
            "median": round_half_even(self.median, places),
            "mode": round_half_even(self.mode, places),
            "stdev": round_half_even(self.stdev, places),
            "min": round_half_even(self.min, places),
            "max": round_half_even(self.max, places),
        }


def empirical_stats(lm: LengthMultiset) -> StatsReport:
    total = lm.total
    if total == 0:
        raise EmptyMultiset(f"{lm.n} has no factorizations")
    mean = Fraction(sum(m * k for m, k in lm.items()), total)
    var = Fraction(sum(m * m * k for m, k in lm.items()), total) - mean**2
    rank = (total + 1) // 2  # lower median
    seen = 0
    for m, k in lm.items():
        seen += k
        if seen >= rank:
            median = m
            break
    top = max(lm.counts.values())
    mode = min(m for m, k in lm.items() if k == top)
    return StatsReport("empirical", lm.n, mean, var, median, mode, lm.min, lm.max)


def predicted_median_ratio(ws: WeightSystem) -> float:
    """Point ``g`` with half of the limiting density's mass left of it."""
    r1, r2, r3 = (Fraction(m, k) for m, k in zip(ws.m, ws.n))
    if 2 * r2 >= r1 + r3:
        return float(r3) + math.sqrt(float((r1 - r3) * (r2 - r3) / 2))
    return float(r1) - math.sqrt(float((r1 - r3) * (r1 - r2) / 2))


def predicted_stats(ws: WeightSystem, n: int) -> StatsReport:
    r1, r2, r3 = (Fraction(m, k) for m, k in zip(ws.m, ws.n))
    mean = n * (r1 + r2 + r3) / 3
    var = Fraction(n * n, 18) * (r1 * r1 + r2 * r2 + r3 * r3 - r1 * r2 - r2 * r3 - r3 * r1)
    return StatsReport(
        "predicted", n, mean, var, n * predicted_median_ratio(ws), r2 * n, r3 * n, r1 * n
    )
