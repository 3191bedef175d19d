"""Reflection groups in scope: the monomial family G(m,b,n) and the exceptional
groups realized by explicit generator matrices.

Every group exposes the same summary: its order, rank, the hyperplane orbits
(label -> hyperplane count, reflection count, reflection order), the numbers
n_eps of generators a minimal reflection generating set takes from each
orbit, and a *census*: the multiset of per-element data (Molien factors plus
any requested representation statistics) that the series module sums over.

Molien factors.  For g in G, det(1 - q g) = prod (1 - zeta_E^e q^l) over a
list of factors (l, e).  For a decorated permutation each cycle of length l
and decoration sum e contributes one factor (E = m); for a matrix group each
eigenvalue zeta_E^e contributes (1, e).  M_V(g), det(g) and the trace of V
are all read off this list.
"""
from __future__ import annotations

import hashlib
import itertools
import json
import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd, lcm
from pathlib import Path

import numpy as np

from .exactnum import CycloNum, cyc_root_of_unity, totient
from .linalg import CycMatrix, MatGroup, group_closure, mat_rank, nullspace, char_poly
from . import rootsys
from ._exceptional_data import RANK2_GENERATORS

__all__ = [
    "MonomialElement", "mono_stat_MV", "mono_det", "cycles", "MonomialGroup",
    "MatrixReflectionGroup", "build_monomial_group", "build_exceptional",
    "hyperplane_orbits", "stirling_numbers", "count_decoration_tuples",
    "EXCEPTIONAL_NAMES", "ORBIT_LABELS", "UnknownGroup", "CACHE_VERSION",
]

CACHE_VERSION = 1


class UnknownGroup(ValueError):
    pass


# ---------------------------------------------------------------------------
# decorated permutations

@dataclass(frozen=True)
class MonomialElement:
    """(perm, decor): column i of the monomial matrix has zeta_m^decor[i] in row perm[i]."""
    perm: tuple
    decor: tuple
    m: int

    @property
    def n(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "MonomialElement") -> "MonomialElement":
        p, c, m = self.perm, self.decor, self.m
        q, d = other.perm, other.decor
        return MonomialElement(tuple(p[q[i]] for i in range(len(q))),
                               tuple((d[i] + c[q[i]]) % m for i in range(len(q))), m)

    def inverse(self) -> "MonomialElement":
        n, p, c = self.n, self.perm, self.decor
        pinv = [0] * n
        for i in range(n):
            pinv[p[i]] = i
        # (p, c)(pinv, d) = (id, d + c o pinv) = id  =>  d = -c o pinv
        return MonomialElement(tuple(pinv), tuple((-c[pinv[i]]) % self.m for i in range(n)), self.m)

    def matrix(self) -> CycMatrix:
        n, m = self.n, self.m
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[self.perm[i]][i] = cyc_root_of_unity(m, self.decor[i])
        return CycMatrix(rows, m)

    @classmethod
    def identity(cls, n, m):
        return cls(tuple(range(n)), (0,) * n, m)


def cycles(g: MonomialElement) -> list[tuple[int, int]]:
    """(length, decoration sum mod m) for each cycle of the underlying permutation."""
    n, seen, out = g.n, [False] * g.n, []
    for i in range(n):
        if seen[i]:
            continue
        j, ln, s = i, 0, 0
        while not seen[j]:
            seen[j] = True
            s += g.decor[j]
            ln += 1
            j = g.perm[j]
        out.append((ln, s % g.m))
    return out


def mono_stat_MV(g: MonomialElement, m: int | None = None) -> int:
    """n minus the number of cycles whose decoration sum is 0 mod m."""
    m = m or g.m
    return g.n - sum(1 for ln, s in cycles(g) if s % m == 0)


def mono_det(g: MonomialElement, m: int | None = None) -> CycloNum:
    m = m or g.m
    cyc = cycles(g)
    sign = (-1) ** sum(ln - 1 for ln, _ in cyc)
    return cyc_root_of_unity(m, sum(g.decor)) * sign


def stirling_numbers(n: int) -> list[int]:
    """Stir_i(n) = #{elements of S_n with n - i cycles}, i = 0..n-1."""
    if n < 1:
        raise ValueError("n must be positive")
    # coefficients of prod_{i=1}^{n-1} (1 + i q)
    c = [1]
    for i in range(1, n):
        c = [a + i * b for a, b in zip(c + [0], [0] + c)]
    return c


def count_decoration_tuples(m: int, a: int, b: int, j: int) -> tuple[int, int]:
    """(m_j, n_j): j-tuples from {1..m-1} with sum 0 mod a and mod b, resp. 0 mod b but not mod a."""
    if m != a * b:
        raise ValueError("need m = a b")
    d = gcd(a, b)
    t = ((m - 1) ** j - (-1) ** j)
    return d * t // m + (-1) ** j, (a - d) * t // m


# ---------------------------------------------------------------------------
# generic group summary

@dataclass
class OrbitInfo:
    label: str
    hyperplanes: int
    reflections: int

    @property
    def reflection_order(self) -> int:
        return self.reflections // self.hyperplanes + 1


class ReflectionGroupBase:
    name: str
    rank: int
    order: int
    E: int  # conductor of Molien factors
    orbits: dict  # label -> OrbitInfo
    n_eps: dict
    well_restricted: dict
    well_generated: bool

    @property
    def num_reflections(self) -> int:
        return sum(o.reflections for o in self.orbits.values())

    @property
    def num_hyperplanes(self) -> int:
        return sum(o.hyperplanes for o in self.orbits.values())

    @property
    def orbit_labels(self) -> list[str]:
        return sorted(self.orbits)

    def census(self, reps=()) -> Counter:
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} order={self.order}>"


def factors_MV(factors, n) -> int:
    return n - sum(1 for _, e in factors if e == 0)


# ---------------------------------------------------------------------------
# the monomial family

class MonomialGroup(ReflectionGroupBase):
    """G(m, b, n) as decorated permutations with decoration sum 0 mod b."""

    def __init__(self, m: int, b: int, n: int, cap: int = 10 ** 6):
        if m < 1 or b < 1 or n < 1:
            raise ValueError("parameters must be positive")
        if m % b:
            raise ValueError(f"b={b} does not divide m={m}")
        order = m ** n * factorial(n) // b
        if order > cap:
            raise ValueError(f"|G({m},{b},{n})| = {order} exceeds cap {cap}")
        self.m, self.b, self.n = m, b, n
        self.a = m // b
        self.name = f"G({m},{b},{n})"
        self.rank = n
        self.order = order
        self.E = m
        # G(1,1,n) fixes the all-ones line and G(2,2,2) is diagonalizable
        self.irreducible = not ((m == 1 and n >= 2) or (m, b, n) == (2, 2, 2))
        self._orbit_setup()

    @property
    def is_dihedral_split(self) -> bool:
        return self.n == 2 and self.b % 2 == 0

    def reflections(self) -> dict:
        """label -> list of MonomialElement."""
        m, b, n, a = self.m, self.b, self.n, self.a
        out = {}
        if a > 1:
            out["s"] = []
            for i in range(n):
                for c in range(b, m, b):
                    dec = [0] * n
                    dec[i] = c
                    out["s"].append(MonomialElement(tuple(range(n)), tuple(dec), m))
        for i, j in itertools.combinations(range(n), 2):
            perm = list(range(n))
            perm[i], perm[j] = j, i
            for k in range(m):
                dec = [0] * n
                dec[i], dec[j] = k, (-k) % m
                lab = self.t_label(k)
                out.setdefault(lab, []).append(MonomialElement(tuple(perm), tuple(dec), m))
        return out

    def t_label(self, k: int) -> str:
        """Orbit label of the hyperplane x_j = zeta^k x_i."""
        if self.is_dihedral_split:
            even = (k % 2 == 0)
            if self.a == 1:
                return "s" if even else "t"
            return "t" if even else "u"
        return "t"

    def hyperplanes(self) -> dict:
        m, n = self.m, self.n
        out = {}
        if self.a > 1:
            out["s"] = [("x", i) for i in range(n)]
        for i, j in itertools.combinations(range(n), 2):
            for k in range(m):
                out.setdefault(self.t_label(k), []).append(("x=zx", i, j, k))
        return out

    def _orbit_setup(self):
        refl = self.reflections()
        hyp = self.hyperplanes()
        self.orbits = {lab: OrbitInfo(lab, len(hyp[lab]), len(refl[lab])) for lab in refl}
        m, b, n, a = self.m, self.b, self.n, self.a
        # standard generators: s = diag(zeta^b,1,..) ; t2' = (12) twisted by zeta ; t_i = (i-1 i)
        gens = self.standard_generators()
        cnt = Counter(lab for lab, _ in gens)
        self.n_eps = dict(cnt)
        self.well_generated = len(gens) == n
        wr = {}
        for lab in self.orbits:
            if self.n_eps.get(lab, 0) <= 1:
                wr[lab] = True
            elif lab == "t" and a > 1 and b > 1:
                # every parabolic minimally generated by n_t reflections meets R_s
                wr[lab] = False
            else:
                wr[lab] = True
        self.well_restricted = wr

    def standard_generators(self) -> list[tuple[str, MonomialElement]]:
        m, b, n, a = self.m, self.b, self.n, self.a
        ident = list(range(n))
        out = []
        if a > 1:
            dec = [0] * n
            dec[0] = b
            out.append(("s", MonomialElement(tuple(ident), tuple(dec), m)))
        if n >= 2:
            perm = ident[:]
            perm[0], perm[1] = 1, 0
            if b > 1 or a == 1:
                dec = [0] * n
                dec[0], dec[1] = 1, m - 1
                out.append((self.t_label(1), MonomialElement(tuple(perm), tuple(dec), m)))
            out.append((self.t_label(0), MonomialElement(tuple(perm), (0,) * n, m)))
            for i in range(1, n - 1):
                perm = ident[:]
                perm[i], perm[i + 1] = i + 1, i
                out.append(("t", MonomialElement(tuple(perm), (0,) * n, m)))
        if m == 1 and n >= 2 or (a == 1 and b == m and n >= 2 and m == 1):
            pass
        # G(1,1,n) and G(m,m,n): drop the twisted transposition when m = 1 (it equals t)
        seen, uniq = set(), []
        for lab, g in out:
            if (g.perm, g.decor) not in seen:
                seen.add((g.perm, g.decor))
                uniq.append((lab, g))
        return uniq

    # -- enumeration ---------------------------------------------------
    def elements(self):
        m, b, n = self.m, self.b, self.n
        for perm in itertools.permutations(range(n)):
            for dec in itertools.product(range(m), repeat=n):
                if sum(dec) % b == 0:
                    yield MonomialElement(perm, dec, m)

    def signature_counts(self) -> Counter:
        """Counter of cycle signatures (sorted tuples of (length, decoration sum))."""
        from ._accel import monomial_signature_counts
        return monomial_signature_counts(self.m, self.b, self.n)

    def census(self, reps=()) -> Counter:
        """Counter keyed by (factors, rep_1 data, rep_2 data, ...); rep data = (M, chi)."""
        out = Counter()
        if all(getattr(r, "signature_only", False) for r in reps):
            for sig, cnt in self.signature_counts().items():
                key = (sig,) + tuple(r.stat_signature(sig) for r in reps)
                out[key] += cnt
        else:
            for g in self.elements():
                sig = tuple(sorted(cycles(g)))
                key = (sig,) + tuple(r.stat_element(g) for r in reps)
                out[key] += 1
        return out

    def matrix_group(self) -> MatGroup:
        return group_closure([g.matrix() for _, g in self.standard_generators()])


@lru_cache(maxsize=None)
def build_monomial_group(m: int, b: int, n: int) -> MonomialGroup:
    return MonomialGroup(m, b, n)


# ---------------------------------------------------------------------------
# matrix groups

# Orbit labels: (hyperplane count, reflection order) per label
ORBIT_LABELS = {
    "G4": {"s": (4, 3)},
    "G5": {"s": (4, 3), "t": (4, 3)},
    "G6": {"s": (6, 2), "t": (4, 3)},
    "G7": {"s": (6, 2), "t": (4, 3), "u": (4, 3)},
    "G9": {"s": (12, 2), "t": (6, 4)},
    "G10": {"s": (8, 3), "t": (6, 4)},
    "G11": {"s": (12, 2), "t": (8, 3), "u": (6, 4)},
    "G13": {"s": (6, 2), "t": (12, 2)},
    "G14": {"s": (12, 2), "t": (8, 3)},
    "G15": {"s": (12, 2), "t": (8, 3), "u": (6, 2)},
    "G17": {"s": (30, 2), "t": (12, 5)},
    "G18": {"s": (20, 3), "t": (12, 5)},
    "G19": {"s": (30, 2), "t": (20, 3), "u": (12, 5)},
    "G21": {"s": (30, 2), "t": (20, 3)},
    "G23": {"s": (15, 2)},
    "G26": {"s": (9, 2), "t": (12, 3)},
    "G28": {"s": (12, 2), "t": (12, 2)},
}
EXCEPTIONAL_NAMES = list(ORBIT_LABELS)
# expected group orders (product of degrees), validated on construction
EXPECTED_ORDER = {"G4": 24, "G5": 72, "G6": 48, "G7": 144, "G9": 192, "G10": 288, "G11": 576,
                  "G13": 96, "G14": 144, "G15": 288, "G17": 1200, "G18": 1800, "G19": 3600,
                  "G21": 720, "G23": 120, "G26": 1296, "G28": 1152}


def _parse_entry(c, N):
    qs = [Fraction(x) for x in c]
    den = 1
    for q in qs:
        den = lcm(den, q.denominator)
    return CycloNum(N, [int(q * den) for q in qs], den)


def exceptional_generators(name: str) -> list[CycMatrix]:
    if name in RANK2_GENERATORS:
        d = RANK2_GENERATORS[name]
        N = d["conductor"]
        return [CycMatrix([[_parse_entry(c, N) for c in row] for row in g], N) for g in d["gens"]]
    if name == "G23":
        # geometric representation of the Coxeter group H3 (m_12 = 5, m_23 = 3)
        phi = -(cyc_root_of_unity(5, 2) + cyc_root_of_unity(5, 3))  # 2 cos(pi/5)
        M = [[1, 5, 2], [5, 1, 3], [2, 3, 1]]
        c = {2: 0, 3: 1, 5: phi}
        gens = []
        for i in range(3):
            rows = [[1 if r == k else 0 for k in range(3)] for r in range(3)]
            rows[i] = [(-1 if j == i else c[M[i][j]]) for j in range(3)]
            gens.append(CycMatrix(rows, 5))
        return gens
    if name == "G26":
        w = cyc_root_of_unity(3, 1)
        third = (w - 1) * Fraction(1, 3)
        hess = CycMatrix([[1 + third, third, third], [third, 1 + third, third], [third, third, 1 + third]], 3)
        swap = CycMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]], 3)
        swap23 = CycMatrix([[1, 0, 0], [0, 0, 1], [0, 1, 0]], 3)
        diag = CycMatrix.diag([w, 1, 1], 3)
        return [swap, swap23, diag, hess]
    if name == "G28":
        R = rootsys.build_root_system("F", 4)
        return [CycMatrix(R.simple_reflection_matrix(i), 1) for i in range(4)]
    raise UnknownGroup(f"unknown exceptional group {name!r}")


def _line_key(v):
    k = next(i for i, x in enumerate(v) if not x.is_zero())
    inv = v[k].inverse()
    return tuple((x * inv).key() for x in v)


def _apply(m: CycMatrix, v):
    n = m.n
    zero = CycloNum.rational(0, m.N)
    out = []
    for i in range(n):
        acc = zero
        for j in range(n):
            if not v[j].is_zero():
                acc = acc + m[i, j] * v[j]
        out.append(acc)
    return out


class MatrixReflectionGroup(ReflectionGroupBase):
    """A reflection group given by generator matrices (closure enumerated)."""

    def __init__(self, name: str, G: MatGroup, labels: dict | None = None):
        self.name = name
        self.G = G
        self.rank = G.n
        self.order = len(G)
        self.irreducible = True
        self._eigen()
        self._reflections()
        self._label_orbits(labels)
        self._generation()

    # eigenvalue data ----------------------------------------------------
    def _eigen(self):
        G = self.G
        orders = G.element_orders()
        E = G.N
        for o in set(orders.tolist()):
            E = lcm(E, int(o))
        self.E = E
        cp_cache = {}
        factors = []
        for g in G.elements:
            cp = char_poly(g)
            key = tuple(c.key() for c in cp)
            if key not in cp_cache:
                cp_cache[key] = self._roots(cp, E)
            factors.append(cp_cache[key])
        self.factors = factors  # per element: sorted tuple of (1, e)
        self.MV = np.array([factors_MV(f, self.rank) for f in factors], dtype=np.int64)
        self.det_exp = np.array([sum(e for _, e in f) % E for f in factors], dtype=np.int64)

    @staticmethod
    def _roots(cp, E):
        """Eigenvalue exponents over zeta_E of a characteristic polynomial."""
        poly = [c.embed(lcm(c.N, E)) for c in cp]
        NN = poly[0].N
        roots = []
        for k in range(E):
            z = cyc_root_of_unity(E, k).embed(NN)
            while len(poly) > 1:
                # synthetic division by (x - z)
                q = [None] * (len(poly) - 1)
                acc = CycloNum.rational(0, NN)
                for i in range(len(poly) - 1, 0, -1):
                    acc = poly[i] + acc * z if i < len(poly) - 1 else poly[i]
                    q[i - 1] = acc
                rem = poly[0] + acc * z
                if not rem.is_zero():
                    break
                roots.append(k)
                poly = q
        if len(poly) != 1:
            raise AssertionError("characteristic polynomial does not split over roots of unity")
        return tuple(sorted((1, k) for k in roots))

    # reflections & hyperplanes --------------------------------------------
    def _reflections(self):
        G = self.G
        self.refl_ids = [int(i) for i in np.nonzero(self.MV == 1)[0]]
        self.line_of, self.line_vec = {}, {}
        for r in self.refl_ids:
            d = G.elements[r].minus_identity()
            n = d.n
            col = next([d[i, j] for i in range(n)] for j in range(n)
                       if any(not d[i, j].is_zero() for i in range(n)))
            k = _line_key(col)
            self.line_of[r] = k
            self.line_vec[k] = col

    def _label_orbits(self, labels):
        lines = sorted(set(self.line_of.values()))
        seen, orbits = set(), []
        for L in lines:
            if L in seen:
                continue
            orb, stack = {L}, [L]
            while stack:
                cur = stack.pop()
                for g in self.G.gens:
                    nk = _line_key(_apply(g, self.line_vec[cur]))
                    if nk not in orb:
                        orb.add(nk)
                        stack.append(nk)
            seen |= orb
            orbits.append(orb)
        data = []
        for orb in orbits:
            rs = [r for r in self.refl_ids if self.line_of[r] in orb]
            data.append((len(orb), len(rs) // len(orb) + 1, min(rs), orb, rs))
        data.sort(key=lambda t: t[2])
        assigned = {}
        if labels is None:
            for lab, d in zip("stu", data):
                assigned[lab] = d
        else:
            free = list(data)
            for lab in sorted(labels):
                want = labels[lab]
                hit = next((d for d in free if (d[0], d[1]) == want), None)
                if hit is None:
                    raise AssertionError(f"{self.name}: no hyperplane orbit with data {want} for label {lab}")
                free.remove(hit)
                assigned[lab] = hit
            if free:
                raise AssertionError(f"{self.name}: unlabelled hyperplane orbits")
        self.orbits = {lab: OrbitInfo(lab, d[0], len(d[4])) for lab, d in assigned.items()}
        self.orbit_lines = {lab: d[3] for lab, d in assigned.items()}
        self.orbit_reflections = {lab: d[4] for lab, d in assigned.items()}
        self.label_of_reflection = {r: lab for lab, d in assigned.items() for r in d[4]}

    # generation ---------------------------------------------------------------
    def _refl_perms(self):
        if not hasattr(self, "_rperms"):
            self._rperms = {r: self.G.right_perm(r) for r in self.refl_ids}
        return self._rperms

    def _generates(self, combo, target=None) -> bool:
        target = target or self.order
        perms = self._refl_perms()
        seen = np.zeros(self.order, dtype=bool)
        seen[0] = True
        frontier = np.array([0])
        count = 1
        ps = [perms[r] for r in combo]
        while frontier.size:
            nxt = []
            for p in ps:
                img = p[frontier]
                img = img[~seen[img]]
                if img.size:
                    img = np.unique(img)
                    seen[img] = True
                    nxt.append(img)
            frontier = np.concatenate(nxt) if nxt else np.zeros(0, dtype=np.int64)
            count = int(seen.sum())
        return count == target

    def minimal_generating_sets(self, exhaustive: bool = False):
        """Minimal reflection generating sets (first found, or all if exhaustive)."""
        classes = self.G.conjugacy_classes()
        reps = []
        seen_cls = set()
        for r in self.refl_ids:
            if classes[r] not in seen_cls:
                seen_cls.add(classes[r])
                reps.append(r)
        found = []
        for size in (self.rank, self.rank + 1):
            if exhaustive:
                for combo in itertools.combinations(self.refl_ids, size):
                    if self._generates(combo):
                        found.append(combo)
            else:
                for first in reps:
                    rest = [r for r in self.refl_ids if r != first]
                    for more in itertools.combinations(rest, size - 1):
                        combo = (first,) + more
                        if self._generates(combo):
                            return [combo]
            if found:
                return found
        raise AssertionError("no generating set of reflections found")

    def _generation(self):
        gens = [self.G.id_of(g) for g in self.G.gens]
        if all(self.MV[g] == 1 for g in gens) and len(gens) <= self.rank + 1 and self._minimal(gens):
            combo = gens
        else:
            combo = self.minimal_generating_sets()[0]
        self.min_gens = list(combo)
        self.well_generated = len(combo) == self.rank
        cnt = Counter(self.label_of_reflection[r] for r in combo)
        self.n_eps = {lab: cnt.get(lab, 0) for lab in self.orbits}
        self.well_restricted = {lab: self.is_well_restricted(lab) for lab in self.orbits}

    def _minimal(self, gens) -> bool:
        if len(gens) == self.rank:
            return True
        # rank + 1 generators: minimal iff no rank-sized reflection set generates
        try:
            return len(self.minimal_generating_sets()[0]) == len(gens)
        except AssertionError:
            return False

    def check_minimal_sets(self) -> set:
        """Exhaustive check that every minimal reflection generating set has the
        same orbit distribution; returns the set of distributions seen."""
        dists = set()
        for combo in self.minimal_generating_sets(exhaustive=True):
            c = Counter(self.label_of_reflection[r] for r in combo)
            dists.add(tuple(sorted(c.items())))
        return dists

    # flats and parabolic subgroups -------------------------------------------
    def _fix_basis(self, ids):
        rows = []
        for r in ids:
            rows += self.G.elements[r].minus_identity().rows()
        return nullspace(rows)

    def _fixes(self, r, basis) -> bool:
        d = self.G.elements[r].minus_identity()
        for v in basis:
            if any(not x.is_zero() for x in _apply(d, v)):
                return False
        return True

    def is_well_restricted(self, lab: str) -> bool:
        """Some parabolic subgroup generated inside R_eps is minimally generated
        by n_eps reflections."""
        k = self.n_eps.get(lab, 0)
        if k == 0:
            return False
        if k == 1:
            return True  # the cyclic parabolic fixing one hyperplane of the orbit
        orbit_refl = set(self.orbit_reflections[lab])
        # flats of codimension c in {k-1, k}; codimension-1 parabolics are cyclic
        line_rep = {}
        for r in self.refl_ids:
            line_rep.setdefault(self.line_of[r], r)
        reps = [line_rep[L] for L in sorted(line_rep)]
        seen_flats = set()
        for c in sorted({max(k - 1, 2), k}):
            if c > self.rank:
                continue
            for combo in itertools.combinations(reps, c):
                basis = self._fix_basis(combo)
                if len(basis) != self.rank - c:
                    continue
                key = _flat_key(basis, self.rank)
                if key in seen_flats:
                    continue
                seen_flats.add(key)
                fixing = [r for r in self.refl_ids if self._fixes(r, basis)]
                if not set(fixing) <= orbit_refl:
                    continue
                sub = self.G.subgroup(fixing)
                # minimal number of reflections generating G_X
                mg = None
                for size in range(1, len(fixing) + 1):
                    if any(self._generates(cmb, len(sub)) for cmb in itertools.combinations(fixing, size)):
                        mg = size
                        break
                if mg == k:
                    return True
        return False


def _flat_key(basis, n):
    """Canonical key of span(basis): reduced row echelon form."""
    rows = [list(v) for v in basis]
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return tuple(tuple(x.key() for x in row) for row in rows)


# ---------------------------------------------------------------------------
# cache

def cache_dir() -> Path:
    return Path(os.environ.get("REFLEX_CACHE_DIR", ".reflex-cache"))


def _gens_hash(gens) -> str:
    blob = json.dumps([g.to_json() for g in gens], sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _save_group(name, G: MatGroup, orbits) -> None:
    d = cache_dir()
    try:
        d.mkdir(parents=True, exist_ok=True)
        path = d / f"{name}-{_gens_hash(G.gens)}.json"
        obj = {
            "version": CACHE_VERSION,
            "name": name,
            "conductor": G.N,
            "generators": [g.to_json() for g in G.gens],
            "elements": [[[list(x.num), x.den] for x in g.e] for g in G.elements],
            "orbits": orbits,
            "right": G.right.tolist(),
            "left": G.left.tolist(),
            "parent": G.parent.tolist(),
            "pgen": G.pgen.tolist(),
        }
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(obj))
        tmp.replace(path)
    except OSError:
        pass


def _load_group(name, gens) -> MatGroup | None:
    path = cache_dir() / f"{name}-{_gens_hash(gens)}.json"
    if not path.exists():
        return None
    try:
        obj = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if obj.get("version") != CACHE_VERSION or obj.get("name") != name:
        return None
    N = obj["conductor"]
    n = gens[0].n
    elements = [CycMatrix._raw(n, N, [CycloNum(N, tuple(num), den, _canonical=True) for num, den in g])
                for g in obj["elements"]]
    G = MatGroup([g.embed(N) for g in gens], elements, obj["right"], obj["left"], obj["parent"], obj["pgen"])
    # spot-check the table against the matrices
    for i in range(0, len(G), max(1, len(G) // 16)):
        for k, x in enumerate(G.gens):
            if (G.elements[i] @ x).key() != G.elements[G.right[i, k]].key():
                return None
    return G


@lru_cache(maxsize=None)
def build_exceptional(name: str, use_cache: bool = True) -> MatrixReflectionGroup:
    if name not in ORBIT_LABELS:
        raise UnknownGroup(f"unknown exceptional group {name!r}; supported: {', '.join(EXCEPTIONAL_NAMES)}")
    gens = exceptional_generators(name)
    G = _load_group(name, gens) if use_cache else None
    fresh = G is None
    if fresh:
        G = group_closure(gens)
    if len(G) != EXPECTED_ORDER[name]:
        raise AssertionError(f"{name}: closure has {len(G)} elements, expected {EXPECTED_ORDER[name]}")
    RG = MatrixReflectionGroup(name, G, ORBIT_LABELS[name])
    if fresh and use_cache:
        _save_group(name, G, {lab: [o.hyperplanes, o.reflections] for lab, o in RG.orbits.items()})
    return RG


def build_group(spec: str):
    """Build from a textual spec: 'G(m,b,n)' or 'Gk'."""
    s = spec.replace(" ", "")
    if s.startswith("G(") and s.endswith(")"):
        try:
            m, b, n = (int(x) for x in s[2:-1].split(","))
        except ValueError:
            raise UnknownGroup(f"cannot parse group spec {spec!r}")
        return build_monomial_group(m, b, n)
    if s in ORBIT_LABELS:
        return build_exceptional(s)
    raise UnknownGroup(f"cannot parse group spec {spec!r}")


def hyperplane_orbits(G) -> dict:
    """label -> list of hyperplane keys."""
    if isinstance(G, MonomialGroup):
        return G.hyperplanes()
    return {lab: sorted(lines) for lab, lines in G.orbit_lines.items()}
