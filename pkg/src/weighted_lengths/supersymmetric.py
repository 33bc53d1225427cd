"""Translated histograms on supersymmetric semigroups ``<ab, ac, bc>``.

With ``n = (ab, ac, bc)``, the weightings ``m1 = (b, a, c)`` and
``m2 = (a, c, b)`` give length multisets that are exact translates:
``|Z1(m, n)| == |Z2(m + r_n, n)|`` for an offset ``r_n`` periodic mod ``abc``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import isqrt
from typing import Optional, Tuple

from .core import Triple, WeightSystem, dot
from .enumeration import enumerate_factorizations, length_multiset
from .errors import NotInSemigroup


def is_element(generators, n: int) -> bool:
    if n < 0:
        return False
    g1, g2, g3 = generators
    for x3 in range(n // g3 + 1):
        rest = n - g3 * x3
        for x2 in range(rest // g2 + 1):
            if (rest - g2 * x2) % g1 == 0:
                return True
    return False


@dataclass(frozen=True)
class SupersymmetricSystem:
    a: int
    b: int
    c: int
    permutation: Optional[Tuple[Triple, Triple]] = None  # set by canonicalize()

    def __post_init__(self):
        if min(self.a, self.b, self.c) <= 0 or len({self.a, self.b, self.c}) != 3:
            raise ValueError(f"a, b, c must be distinct positive integers, got {(self.a, self.b, self.c)}")

    @property
    def n(self) -> Triple:
        return (self.a * self.b, self.a * self.c, self.b * self.c)

    @property
    def m1(self) -> Triple:
        return (self.b, self.a, self.c)

    @property
    def m2(self) -> Triple:
        return (self.a, self.c, self.b)

    @property
    def abc(self) -> int:
        return self.a * self.b * self.c

    @property
    def first(self) -> WeightSystem:
        return WeightSystem(self.m1, self.n)

    @property
    def second(self) -> WeightSystem:
        return WeightSystem(self.m2, self.n)


def _permute(v, p):
    return tuple(v[i] for i in p)


def canonicalize(m1, n1, m2, n2) -> SupersymmetricSystem:
    """Recover ``(a, b, c)`` from two coordinate-permuted weight systems.

    The returned system records, for each input, the permutation ``p`` such
    that ``input[i] == canonical[p[i]]``.
    """
    m1, n1, m2, n2 = (tuple(int(x) for x in v) for v in (m1, n1, m2, n2))
    prod = n1[0] * n1[1] * n1[2]
    abc = isqrt(prod)
    if abc * abc != prod or sorted(n1) != sorted(n2):
        raise ValueError("generators are not of the form (ab, ac, bc)")
    letters = {abc // g for g in n1}
    for a, b, c in itertools.permutations(sorted(letters)):
        try:
            sys = SupersymmetricSystem(a, b, c)
        except ValueError:
            break
        found = []
        for m_in, n_in, m_can in ((m1, n1, sys.m1), (m2, n2, sys.m2)):
            for p in itertools.permutations(range(3)):
                if _permute(sys.n, p) == n_in and _permute(m_can, p) == m_in:
                    found.append(p)
                    break
        if len(found) == 2:
            return SupersymmetricSystem(a, b, c, (found[0], found[1]))
    raise ValueError("inputs are not a supersymmetric pair")


@dataclass(frozen=True)
class Decomposition:
    q: int
    r: int
    x: Triple


def decompose(sys: SupersymmetricSystem, n: int) -> Decomposition:
    """Split ``n = q*abc + r`` with ``r`` in S and ``r - abc`` not in S."""
    gens = sys.n
    if not is_element(gens, n):
        raise NotInSemigroup(f"{n} is not in <{gens[0]}, {gens[1]}, {gens[2]}>")
    abc = sys.abc
    hits = [
        q
        for q in range(n // abc, -1, -1)
        if is_element(gens, n - q * abc) and not is_element(gens, n - q * abc - abc)
    ]
    assert len(hits) == 1, f"decomposition of {n} is not unique: q in {hits}"
    q = hits[0]
    r = n - q * abc
    xs = enumerate_factorizations(sys.first, r)
    assert len(xs) == 1, f"{r} has {len(xs)} factorizations, expected exactly one"
    return Decomposition(q, r, tuple(xs[0]))


def translation_offset(sys: SupersymmetricSystem, n: int) -> int:
    x = decompose(sys, n).x
    return dot(sys.m2, x) - dot(sys.m1, x)


def verify_translation(sys: SupersymmetricSystem, n: int) -> bool:
    """Brute-force both histograms of ``n`` and check they are translates by ``r_n``."""
    offset = translation_offset(sys, n)
    h1 = length_multiset(sys.first, n)
    h2 = length_multiset(sys.second, n)
    shifted = {m + offset: k for m, k in h1.items()}
    return shifted == h2.counts
