"""Crystallographic root systems: positive roots, heights, exponents, short exponents.

Roots are stored by their coefficient vectors over the simple roots; squared
lengths come from explicit coordinates and are normalized so short roots have
weight 1 and long roots weight r (r = 2 for B, C, F4 and r = 3 for G2).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "RootSystem", "build_root_system", "weighted_height", "exponents_from_heights",
    "short_exponents", "dual_partition",
]

SUPPORTED = {"A", "B", "C", "D", "F", "G"}


def _e(n, i, c=1):
    v = [Fraction(0)] * n
    v[i] = Fraction(c)
    return v


def _simple_coords(typ: str, n: int):
    """Simple roots in a standard orthonormal coordinate system."""
    if typ == "A":
        return [[Fraction(x) for x in (_e(n + 1, i)[k] - _e(n + 1, i + 1)[k] for k in range(n + 1))]
                for i in range(n)]
    if typ in "BCD":
        S = [[_e(n, i)[k] - _e(n, i + 1)[k] for k in range(n)] for i in range(n - 1)]
        if typ == "B":
            S.append(_e(n, n - 1))
        elif typ == "C":
            S.append(_e(n, n - 1, 2))
        else:
            S.append([_e(n, n - 2)[k] + _e(n, n - 1)[k] for k in range(n)])
        return S
    if typ == "F":
        h = Fraction(1, 2)
        return [[0, 1, -1, 0], [0, 0, 1, -1], [0, 0, 0, 1], [h, -h, -h, -h]]
    if typ == "G":
        return [[1, -1, 0], [-2, 1, 1]]
    raise ValueError(f"unsupported type {typ}")


def _dot(u, v):
    return sum(Fraction(a) * Fraction(b) for a, b in zip(u, v))


def dual_partition(counts) -> list[int]:
    """Exponents from a height census: e occurs m_e - m_{e+1} times, where
    m_k is the number of roots of height k (the conjugate partition)."""
    m = Counter(counts)
    if not m:
        return []
    top = max(m)
    out = []
    for e in range(1, top + 1):
        out += [e] * (m.get(e, 0) - m.get(e + 1, 0))
    return sorted(out)


@dataclass
class RootSystem:
    typ: str
    rank: int
    simple: list  # coordinate vectors
    cartan: list  # cartan[i][j] = <alpha_i, alpha_j^vee>
    positive: list = field(default_factory=list)  # coefficient tuples
    weight: dict = field(default_factory=dict)  # coefficient tuple -> 1 or r
    r: int = 1

    @property
    def label(self) -> str:
        return f"{self.typ}{self.rank}"

    def coords(self, coeffs):
        n = len(self.simple[0])
        return [sum(Fraction(c) * self.simple[i][k] for i, c in enumerate(coeffs)) for k in range(n)]

    def height(self, alpha) -> int:
        return sum(alpha)

    @property
    def highest_root(self):
        return max(self.positive, key=sum)

    @property
    def coxeter_number(self) -> int:
        return sum(self.highest_root) + 1

    @property
    def simple_weights(self):
        return [self.weight[tuple(1 if j == i else 0 for j in range(self.rank))] for i in range(self.rank)]

    def short_roots(self):
        return [a for a in self.positive if self.weight[a] == 1]

    def long_roots(self):
        return [a for a in self.positive if self.weight[a] != 1]

    def reflect(self, i: int, alpha):
        """s_i(alpha) on coefficient vectors."""
        c = sum(alpha[j] * self.cartan[j][i] for j in range(self.rank))
        out = list(alpha)
        out[i] -= c
        return tuple(out)

    def simple_reflection_matrix(self, i: int):
        """Matrix of s_i acting on coefficient column vectors (integer entries)."""
        n = self.rank
        cols = [self.reflect(i, tuple(1 if k == j else 0 for k in range(n))) for j in range(n)]
        return [[cols[j][r] for j in range(n)] for r in range(n)]

    def dual(self) -> "RootSystem":
        """Root system of coroots alpha^vee = 2 alpha / |alpha|^2."""
        co = [[2 * x / _dot(a, a) for x in a] for a in self.simple]
        dtyp = {"B": "C", "C": "B"}.get(self.typ, self.typ)
        return _from_simple(dtyp, self.rank, co)


def _from_simple(typ, n, simple) -> RootSystem:
    cartan = [[2 * _dot(simple[i], simple[j]) / _dot(simple[j], simple[j]) for j in range(n)] for i in range(n)]
    cartan = [[int(x) for x in row] for row in cartan]
    R = RootSystem(typ, n, simple, cartan)
    start = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(start)
    stack = list(start)
    while stack:
        a = stack.pop()
        for i in range(n):
            b = R.reflect(i, a)
            if all(x >= 0 for x in b) and any(b) and b not in seen:
                seen.add(b)
                stack.append(b)
    R.positive = sorted(seen, key=lambda a: (sum(a), a))
    lens = {a: _dot(R.coords(a), R.coords(a)) for a in R.positive}
    short = min(lens.values())
    for a, L in lens.items():
        q = L / short
        if q.denominator != 1:
            raise AssertionError("non-integral length ratio")
        R.weight[a] = int(q)
    R.r = max(R.weight.values())
    return R


@lru_cache(maxsize=None)
def build_root_system(typ: str, rank: int) -> RootSystem:
    typ = typ.upper()
    if typ not in SUPPORTED:
        raise ValueError(f"unsupported root system type {typ!r}")
    if typ == "F" and rank != 4 or typ == "G" and rank != 2:
        raise ValueError(f"unsupported root system {typ}{rank}")
    if typ == "D" and not 4 <= rank <= 6 or typ in "BC" and rank < 2 or rank < 1:
        raise ValueError(f"unsupported root system {typ}{rank}")
    simple = [[Fraction(x) for x in v] for v in _simple_coords(typ, rank)]
    return _from_simple(typ, rank, simple)


def weighted_height(alpha, R: RootSystem) -> int:
    """Ht(alpha) = sum a_i w(alpha_i)."""
    return sum(a * w for a, w in zip(alpha, R.simple_weights))


def exponents_from_heights(R: RootSystem) -> list[int]:
    return dual_partition([sum(a) for a in R.positive])


def short_exponents(R: RootSystem) -> list[int]:
    """Dual partition of the heights of the short roots of the dual system
    (empty for simply-laced systems)."""
    if R.r == 1:
        return []
    D = R.dual()
    return dual_partition([sum(a) for a in D.short_roots()])
