"""Weighted Poincare series of Weyl groups: finite sums over inversion sets,
their product forms, the affine alcove series, the two-parameter dihedral
series, and orders of twisted Chevalley groups.

Polynomials and truncated series are integer coefficient lists, constant term first.
"""
from __future__ import annotations

import cmath
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exactnum import CycloNum, cyc_root_of_unity
from .rootsys import (RootSystem, build_root_system, exponents_from_heights,
                      short_exponents, weighted_height)

__all__ = [
    "WeylElement", "enumerate_weyl", "weighted_stat", "finite_weighted_poincare",
    "closed_form_finite", "macdonald_product", "macdonald_factors", "affine_weighted_series",
    "affine_rhs_printed", "affine_rhs_corrected", "affine_rhs_unweighted",
    "dihedral_two_param", "chevalley_order", "chevalley_order_classical",
    "TWISTED_TYPES", "WEYL_CAP", "PolyDivisionError",
]

WEYL_CAP = 50_000


class PolyDivisionError(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# integer polynomial helpers

def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def pdiv_exact(a, b):
    """a / b for integer polynomials; raises unless the division is exact."""
    a, b = _trim(a), _trim(b)
    if len(b) == 1 and b[0] == 0:
        raise ZeroDivisionError("division by zero polynomial")
    rem = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = rem[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, y in enumerate(b):
                rem[i + j] -= c * y
    if any(rem) or any(x.denominator != 1 for x in q):
        raise PolyDivisionError("inexact polynomial division")
    return _trim([int(x) for x in q])


def qint(k: int, step: int = 1, terms: int | None = None):
    """1 + q^step + ... with ``terms`` terms (default k terms of step 1: [k]_q)."""
    terms = k if terms is None else terms
    out = [0] * (step * (terms - 1) + 1)
    for i in range(terms):
        out[i * step] = 1
    return out


def binom_minus(k: int):
    """q^k - 1."""
    out = [0] * (k + 1)
    out[0], out[k] = -1, 1
    return out


def series_mul(a, b, C: int):
    out = [0] * (C + 1)
    for i, x in enumerate(a[:C + 1]):
        if x:
            for j, y in enumerate(b[:C + 1 - i]):
                out[i + j] += x * y
    return out


def series_div(a, b, C: int):
    """a / b as a power series to order C; b[0] must be +-1."""
    a = list(a[:C + 1]) + [0] * max(0, C + 1 - len(a))
    b0 = b[0]
    if b0 not in (1, -1):
        raise PolyDivisionError("series denominator must have unit constant term")
    out = [0] * (C + 1)
    for k in range(C + 1):
        s = a[k] - sum(b[j] * out[k - j] for j in range(1, min(k, len(b) - 1) + 1))
        out[k] = s * b0
    return out


# ---------------------------------------------------------------------------
# finite Weyl groups

@dataclass(frozen=True)
class WeylElement:
    matrix: tuple          # columns: images of the simple roots (coefficient vectors)
    word: tuple            # a reduced word in simple reflections (0-based)
    inversions: frozenset  # positive roots (coefficient tuples) sent negative

    @property
    def length(self) -> int:
        return len(self.inversions)

    def apply(self, alpha):
        n = len(alpha)
        return tuple(sum(alpha[j] * self.matrix[j][i] for j in range(n)) for i in range(n))


def _is_negative(v) -> bool:
    return all(x <= 0 for x in v) and any(v)


@lru_cache(maxsize=None)
def _enumerate_cached(typ: str, rank: int) -> tuple:
    R = build_root_system(typ, rank)
    n = R.rank
    ident = tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n))
    out = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for M in frontier:
            for i in range(n):
                N = tuple(R.reflect(i, col) for col in M)
                if N not in out:
                    out[N] = out[M] + (i,)
                    nxt.append(N)
                    if len(out) > WEYL_CAP:
                        raise OverflowError(f"Weyl group of {R.label} exceeds cap {WEYL_CAP}")
        frontier = nxt
    elems = []
    for M, word in out.items():
        w = WeylElement(M, tuple(reversed(word)), frozenset())
        inv = frozenset(a for a in R.positive if _is_negative(w.apply(a)))
        elems.append(WeylElement(M, w.word, inv))
    return tuple(elems)


def enumerate_weyl(R: RootSystem) -> list[WeylElement]:
    """All elements of W(R) with exact inversion sets.  Words are reduced
    (breadth-first), read left to right as s_{w[0]} s_{w[1]} ..."""
    return list(_enumerate_cached(R.typ, R.rank))


def weighted_stat(w: WeylElement, R: RootSystem, unit: bool = False) -> int:
    return len(w.inversions) if unit else sum(R.weight[a] for a in w.inversions)


def finite_weighted_poincare(R: RootSystem, unit: bool = False) -> list[int]:
    c = Counter(weighted_stat(w, R, unit) for w in enumerate_weyl(R))
    return [c.get(k, 0) for k in range(max(c) + 1)]


def degrees(R: RootSystem) -> list[int]:
    return [e + 1 for e in exponents_from_heights(R)]


def short_degrees(R: RootSystem) -> list[int]:
    """delta_i = epsilon_i + 1 over the short exponents."""
    return [e + 1 for e in short_exponents(R)]


def closed_form_finite(R: RootSystem) -> list[int]:
    """prod_i [r terms of step delta_i] / [r]_q  *  prod_i (q^{d_i}-1)/(q-1), exactly."""
    num, den = [1], [1]
    for d in short_degrees(R):
        num = pmul(num, qint(0, d, R.r))
        den = pmul(den, qint(R.r))
    for d in degrees(R):
        num = pmul(num, qint(d))
    return pdiv_exact(num, den)


def macdonald_product(R: RootSystem, reduce: bool = True):
    """prod_{alpha>0} (q^{w(alpha)+Ht(alpha)}-1)/(q^{Ht(alpha)}-1) with Ht the weighted height.

    Returns (numerator, denominator) lists, or the reduced polynomial if ``reduce``."""
    num, den = [1], [1]
    for a in R.positive:
        h = weighted_height(a, R)
        num = pmul(num, binom_minus(R.weight[a] + h))
        den = pmul(den, binom_minus(h))
    return pdiv_exact(num, den) if reduce else (num, den)


def macdonald_factors(R: RootSystem):
    """Multisets of exponents k in the (q^k - 1) factors of the Macdonald product."""
    num = sorted(R.weight[a] + weighted_height(a, R) for a in R.positive)
    den = sorted(weighted_height(a, R) for a in R.positive)
    return num, den


# ---------------------------------------------------------------------------
# affine Weyl groups: alcove walk

def _cartan_pair(R: RootSystem, a, g) -> int:
    """<a, g^vee> for coefficient vectors a, g."""
    ca, cg = R.coords(a), R.coords(g)
    ip = sum(x * y for x, y in zip(ca, cg))
    gg = sum(y * y for y in cg)
    v = 2 * ip / gg
    assert v.denominator == 1
    return int(v)


@lru_cache(maxsize=None)
def alcove_data(typ: str, rank: int, convention: str = "coroot", unit: bool = False):
    """Integer tables for the alcove walk of the affine Weyl group.

    convention 'coroot': hyperplanes <alpha, x> = k for alpha in the dual system,
    each weighted by the length weight of the corresponding root of R; the
    fundamental alcove is capped by the highest short root of R.
    convention 'root': hyperplanes for the roots of R with their own weights;
    the cap is the highest root of R.
    """
    R = build_root_system(typ, rank)
    if convention == "root":
        Psi = R
        wts = [R.weight[a] for a in Psi.positive]
    elif convention == "coroot":
        Psi = R.dual()
        # long coroots <-> short roots
        wts = [1 if R.r == 1 else (R.r + 1 - Psi.weight[a]) for a in Psi.positive]
    else:
        raise ValueError(f"unknown convention {convention!r}")
    if unit:
        wts = [1] * len(wts)
    pos = Psi.positive
    idx = {a: i for i, a in enumerate(pos)}
    P = len(pos)
    pair = [[_cartan_pair(Psi, pos[d], pos[g]) for g in range(P)] for d in range(P)]
    refl = [[0] * P for _ in range(P)]
    for g in range(P):
        for d in range(P):
            img = tuple(x - pair[d][g] * y for x, y in zip(pos[d], pos[g]))
            if img in idx:
                refl[g][d] = idx[img] + 1
            else:
                refl[g][d] = -(idx[tuple(-x for x in img)] + 1)
    h = Psi.coxeter_number
    heights = [sum(a) for a in pos]  # interior point: <alpha_i, x> = 1/h, scaled by h
    simple = [idx[tuple(1 if j == i else 0 for j in range(rank))] for i in range(rank)]
    walls = [(s, 0) for s in simple] + [(idx[Psi.highest_root], 1)]
    return pair, refl, wts, heights, walls, h


def affine_weighted_series(R: RootSystem, C: int, convention: str = "coroot",
                           unit: bool = False, backend: str | None = None) -> list[int]:
    """Number of alcoves at each value 0..C of the weighted separation statistic."""
    if C < 0:
        raise ValueError("cutoff must be nonnegative")
    from . import _accel
    data = alcove_data(R.typ, R.rank, convention, unit)
    return [int(x) for x in _accel.alcove_counts(*data, C, backend=backend)]


def affine_rhs_printed(R: RootSystem, C: int) -> list[int]:
    """(1-q)^{-n} prod (q^{e_i}-1)/(q^{e_i r}-1) prod (q^{d_i}-1)/(q^{e_i}-1), e_i in the
    short exponents in the middle factor, as a series to order C."""
    num, den = [1], [1]
    for e in short_exponents(R):
        num, den = pmul(num, binom_minus(e)), pmul(den, binom_minus(e * R.r))
    for d, e in zip(degrees(R), exponents_from_heights(R)):
        num, den = pmul(num, binom_minus(d)), pmul(den, binom_minus(e))
    for _ in range(R.rank):
        den = pmul(den, [1, -1])
    return series_div(num, den, C)


def affine_rhs_corrected(R: RootSystem, C: int) -> list[int]:
    """finite weighted polynomial * prod (1-q^{eps})/(1-q^{eps r}) * prod 1/(1-q^{e_i})."""
    num, den = closed_form_finite(R), [1]
    for e in short_exponents(R):
        num, den = pmul(num, binom_minus(e)), pmul(den, binom_minus(e * R.r))
    for e in exponents_from_heights(R):
        den = pmul(den, [1] + [0] * (e - 1) + [-1])
    return series_div(num, den, C)


def affine_rhs_unweighted(R: RootSystem, C: int) -> list[int]:
    """(1-q)^{-n} prod (q^{d_i}-1)/(q^{e_i}-1)."""
    num, den = [1], [1]
    for d, e in zip(degrees(R), exponents_from_heights(R)):
        num, den = pmul(num, binom_minus(d)), pmul(den, binom_minus(e))
    for _ in range(R.rank):
        den = pmul(den, [1, -1])
    return series_div(num, den, C)


# ---------------------------------------------------------------------------
# dihedral groups I_2(2b) with two reflection classes

def _approx(x: CycloNum) -> float:
    z = sum(float(c) * cmath.exp(2j * cmath.pi * k / x.N) for k, c in enumerate(x.coeffs()))
    return z.real


def _dihedral_elements(b: int):
    """I_2(2b) on simple-root coordinates over Q(zeta_{4b}); B(a_s, a_t) = -cos(pi/2b)."""
    N = 4 * b
    z = cyc_root_of_unity(N, 1)
    c2 = z + z.conj()  # 2 cos(pi/2b)
    zero, one = CycloNum.rational(0, N), CycloNum.rational(1, N)

    def s0(v):
        return (-v[0] + c2 * v[1], v[1])

    def s1(v):
        return (v[0], -v[1] + c2 * v[0])

    gens = (s0, s1)
    simple = ((one, zero), (zero, one))

    def key(v):
        return (v[0].key(), v[1].key())

    # group elements as images of the two simple roots
    start = simple
    elems = {tuple(key(v) for v in start): start}
    frontier = [start]
    while frontier:
        nxt = []
        for im in frontier:
            for g in gens:
                new = tuple(g(v) for v in im)
                k = tuple(key(v) for v in new)
                if k not in elems:
                    elems[k] = new
                    nxt.append(new)
        frontier = nxt
    if len(elems) != 4 * b:
        raise AssertionError(f"dihedral closure gave {len(elems)} elements")

    def apply(im, v):
        return (v[0] * im[0][0] + v[1] * im[1][0], v[0] * im[0][1] + v[1] * im[1][1])

    def positive(v):
        for x in v:
            if not x.is_zero():
                return _approx(x) > 0
        raise AssertionError("zero root")

    orbits = []
    for a in simple:
        orb = {}
        for im in elems.values():
            v = apply(im, a)
            if not positive(v):
                v = (-v[0], -v[1])
            orb[key(v)] = v
        orbits.append(list(orb.values()))
    return list(elems.values()), orbits, apply, positive


def dihedral_two_param(b: int) -> dict:
    """Check sum_w q1^{|inv cap Phi_s|} q2^{|inv cap Phi_t|} against
    (1+q1)(1+q2)(1-(q1q2)^b)/(1-q1q2), and the specialization q1=q^b, q2=q."""
    if b < 2:
        raise ValueError("need b >= 2")
    elems, (phi_s, phi_t), apply, positive = _dihedral_elements(b)
    if len(phi_s) != b or len(phi_t) != b:
        raise AssertionError("reflection classes of unexpected size")
    lhs = Counter()
    for im in elems:
        i = sum(1 for a in phi_s if not positive(apply(im, a)))
        j = sum(1 for a in phi_t if not positive(apply(im, a)))
        lhs[(i, j)] += 1
    rhs = Counter()
    for k in range(b):
        for e1 in (0, 1):
            for e2 in (0, 1):
                rhs[(k + e1, k + e2)] += 1
    spec_lhs = Counter()
    for (i, j), c in lhs.items():
        spec_lhs[b * i + j] += c
    spec_lhs = [spec_lhs.get(k, 0) for k in range(max(spec_lhs) + 1)]
    num = pmul(pmul(qint(0, b + 1, b), binom_minus(2)), binom_minus(2 * b))
    den = pmul(pmul(qint(b), [-1, 1]), [-1, 1])
    spec_rhs = pdiv_exact(num, den)
    return {
        "b": b,
        "order": len(elems),
        "bivariate": {f"{i},{j}": c for (i, j), c in sorted(lhs.items())},
        "bivariate_ok": lhs == rhs,
        "specialized": spec_lhs,
        "specialized_rhs": spec_rhs,
        "specialized_ok": spec_lhs == spec_rhs,
        "ok": lhs == rhs and spec_lhs == spec_rhs,
    }


# ---------------------------------------------------------------------------
# twisted Chevalley groups

# twisted type -> (untwisted simply-laced type X, folded type Y); n is the rank of Y
TWISTED_TYPES = {
    "2A": ("A", "B"),  # 2A_{2n-1}: X = A_{2n-1}, Y = B_n
    "2D": ("D", "C"),  # 2D_{n+1}: X = D_{n+1}, Y = C_n
    "2E6": ("E", "F"),
    "3D4": ("D", "G"),
}


def _twisted_params(twisted: str, n: int | None):
    t = twisted.replace("^", "").replace("_", "").upper()
    if t in ("2E6",):
        return "2E6", 36, build_root_system("F", 4)
    if t in ("3D4",):
        return "3D4", 12, build_root_system("G", 2)
    if t.startswith("2A") or t.startswith("2D"):
        kind = t[:2]
        if len(t) > 2:
            m = int(t[2:])
            if kind == "2A":
                if m % 2 == 0 or m < 3:
                    raise ValueError(f"2A needs odd rank >= 3, got {m}")
                n2 = (m + 1) // 2
            else:
                if m < 3:
                    raise ValueError(f"2D needs rank >= 3, got {m}")
                n2 = m - 1
            if n is not None and n != n2:
                raise ValueError("rank given twice inconsistently")
            n = n2
        if n is None or n < 2:
            raise ValueError("twisted type needs rank n >= 2 of the folded type")
        if kind == "2A":
            return f"2A{2 * n - 1}", n * (2 * n - 1), build_root_system("B", n)
        return f"2D{n + 1}", n * (n + 1), build_root_system("C", n)
    raise ValueError(f"unsupported twisted type {twisted!r}")


def chevalley_order(twisted: str, q: int, n: int | None = None) -> int:
    """q^N prod_i (1 + q^{delta_i} + ... + q^{delta_i (r-1)}) prod_i (q^{d_i} - 1), with
    N = |Phi+| of the untwisted type and delta, d, r from the folded type.

    ``twisted`` is one of '2A', '2D' (with ``n`` = rank of the folded type, or
    given inline as '2A5', '2D4'), '2E6', '3D4'."""
    if q < 2:
        raise ValueError("q must be >= 2")
    _, N, Y = _twisted_params(twisted, n)
    out = q ** N
    for dl in short_degrees(Y):
        out *= sum(q ** (dl * i) for i in range(Y.r))
    for d in degrees(Y):
        out *= q ** d - 1
    return out


def chevalley_order_classical(twisted: str, q: int, n: int | None = None) -> int:
    """Independent order formulas: SU(2n), Omega^-(2n+2), 3D4, 2E6."""
    name, _, Y = _twisted_params(twisted, n)
    n = Y.rank
    out = 1
    if name.startswith("2A"):
        out = q ** (n * (2 * n - 1))
        for i in range(2, 2 * n + 1):
            out *= q ** i - (-1) ** i
    elif name.startswith("2D"):
        out = q ** (n * (n + 1)) * (q ** (n + 1) + 1)
        for i in range(1, n + 1):
            out *= q ** (2 * i) - 1
    elif name == "3D4":
        out = q ** 12 * (q ** 8 + q ** 4 + 1) * (q ** 6 - 1) * (q ** 2 - 1)
    elif name == "2E6":
        out = q ** 36
        for f in (q ** 12 - 1, q ** 9 + 1, q ** 8 - 1, q ** 6 - 1, q ** 5 + 1, q ** 2 - 1):
            out *= f
    return out
