"""Series engine: Molien series, degrees, fake degrees, and both sides of the
one- and two-variable generating-function identities.

Sums over the group are taken over a census: the multiset of per-element keys
(Molien factors, then (M, chi) for each requested representation).  Cyclotomic
values are accumulated in the integral group ring Z[C_E] (numpy int64 arrays
indexed by the exponent of zeta_E) and converted to CycloNum only at the end.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exactnum import CycloNum
from .groups import MonomialGroup
from .reps import (EpsRep, NotWellRestricted, eps_rep, reflection_rep, substitute_reps)

__all__ = [
    "UniSeries", "BiPoly", "InvariantTable", "census", "molien_series", "molien_degrees",
    "fake_degrees", "lhs_solomon", "lhs_two_orbit", "rhs_two_orbit", "factor_bivariate_linear",
    "verify_identity", "invariant_table", "pair_reflexponents", "SeriesError",
    "format_poly", "format_factors",
]


class SeriesError(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# univariate truncated series

class UniSeries:
    """Truncated power series sum_{k<=D} c_k q^k with Fraction coefficients."""

    __slots__ = ("c", "D")

    def __init__(self, coeffs, D: int):
        c = [Fraction(x) for x in coeffs][: D + 1]
        c += [Fraction(0)] * (D + 1 - len(c))
        self.c, self.D = c, D

    @classmethod
    def one(cls, D):
        return cls([1], D)

    def __getitem__(self, k):
        return self.c[k] if 0 <= k <= self.D else Fraction(0)

    def __add__(self, other):
        D = min(self.D, other.D)
        return UniSeries([self[k] + other[k] for k in range(D + 1)], D)

    def __sub__(self, other):
        D = min(self.D, other.D)
        return UniSeries([self[k] - other[k] for k in range(D + 1)], D)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniSeries([x * other for x in self.c], self.D)
        D = min(self.D, other.D)
        out = [Fraction(0)] * (D + 1)
        for i, a in enumerate(self.c[: D + 1]):
            if a:
                for j in range(D + 1 - i):
                    if other.c[j]:
                        out[i + j] += a * other.c[j]
        return UniSeries(out, D)

    __rmul__ = __mul__

    def times_binomial(self, d: int, sign: int = -1):
        """Multiply by (1 + sign q^d)."""
        out = list(self.c)
        for k in range(self.D, d - 1, -1):
            out[k] += sign * self.c[k - d]
        return UniSeries(out, self.D)

    def divide_binomial(self, d: int, sign: int = -1):
        """Multiply by 1/(1 + sign q^d)."""
        out = list(self.c)
        for k in range(d, self.D + 1):
            out[k] -= sign * out[k - d]
        return UniSeries(out, self.D)

    def inverse(self):
        if self.c[0] == 0:
            raise ZeroDivisionError("series with zero constant term")
        out = [Fraction(0)] * (self.D + 1)
        out[0] = 1 / self.c[0]
        for k in range(1, self.D + 1):
            s = sum(self.c[j] * out[k - j] for j in range(1, k + 1))
            out[k] = -s / self.c[0]
        return UniSeries(out, self.D)

    def __eq__(self, other):
        if not isinstance(other, UniSeries):
            return NotImplemented
        D = min(self.D, other.D)
        return all(self[k] == other[k] for k in range(D + 1))

    def coefficients(self, upto=None):
        return self.c[: (self.D if upto is None else upto) + 1]

    def __repr__(self):
        return f"UniSeries({[str(x) for x in self.c]}, D={self.D})"


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def poly_from_roots(vals, sign=1):
    """prod (1 + sign*v x) as a coefficient list."""
    p = [1]
    for v in vals:
        p = poly_mul(p, [1, sign * v])
    return p


# ---------------------------------------------------------------------------
# bivariate integer polynomials

class BiPoly:
    """Finitely supported map (i, j) -> integer coefficient of x^i y^j."""

    __slots__ = ("t",)

    def __init__(self, terms=None):
        self.t = {}
        for k, v in (terms or {}).items():
            if v:
                if isinstance(v, Fraction):
                    if v.denominator != 1:
                        raise SeriesError("non-integer coefficient")
                    v = v.numerator
                self.t[tuple(k)] = int(v)

    @classmethod
    def linear(cls, a, b, c=1):
        return cls({(0, 0): c, (1, 0): a, (0, 1): b})

    @classmethod
    def product(cls, factors):
        p = cls({(0, 0): 1})
        for a, b in factors:
            p = p * cls.linear(a, b)
        return p

    def __mul__(self, other):
        out = defaultdict(int)
        for (i, j), u in self.t.items():
            for (k, l), v in other.t.items():
                out[(i + k, j + l)] += u * v
        return BiPoly(out)

    def __add__(self, other):
        out = defaultdict(int, self.t)
        for k, v in other.t.items():
            out[k] += v
        return BiPoly(out)

    def __sub__(self, other):
        out = defaultdict(int, self.t)
        for k, v in other.t.items():
            out[k] -= v
        return BiPoly(out)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.t == other.t

    def __hash__(self):
        return hash(frozenset(self.t.items()))

    def __bool__(self):
        return bool(self.t)

    def coeff(self, i, j) -> int:
        return self.t.get((i, j), 0)

    def degree(self) -> int:
        return max((i + j for i, j in self.t), default=0)

    def collapse(self) -> list[int]:
        """Substitute x := y; coefficient list in the single variable."""
        out = [0] * (self.degree() + 1)
        for (i, j), v in self.t.items():
            out[i + j] += v
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def at(self, x, y):
        return sum(v * x ** i * y ** j for (i, j), v in self.t.items())

    def to_json(self):
        return [[i, j, v] for (i, j), v in sorted(self.t.items())]

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"BiPoly({format_poly(self)})"


def _mono(i, j):
    s = ""
    if i:
        s += "x" + (f"^{i}" if i > 1 else "")
    if j:
        s += "y" + (f"^{j}" if j > 1 else "")
    return s


def format_poly(p: BiPoly) -> str:
    """Expanded form; terms in shell order (max(i,j), i, j), e.g. 1+2y+2x+2xy+y^2."""
    if not p.t:
        return "0"
    parts = []
    for (i, j) in sorted(p.t, key=lambda k: (max(k), k[0], k[1])):
        v = p.t[(i, j)]
        m = _mono(i, j)
        mag = abs(v)
        body = (str(mag) if (mag != 1 or not m) else "") + m
        sign = "-" if v < 0 else "+"
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += sign + body
    return s


def format_factors(factors, signed: bool = False) -> str:
    """prod (1 + a x + b y) (or (1 - a x - b y)), factors in the given order; (1) omitted."""
    out = []
    for a, b in factors:
        s = "1"
        op = "-" if signed else "+"
        if a:
            s += op + (str(a) if a != 1 else "") + "x"
        if b:
            s += op + (str(b) if b != 1 else "") + "y"
        if s != "1":
            out.append(f"({s})")
    return "".join(out) or "1"


# ---------------------------------------------------------------------------
# census and group-ring sums

def census(G, reps=()) -> Counter:
    """Counter keyed by (factors, (M, chi) per rep)."""
    if isinstance(G, MonomialGroup):
        return G.census(reps)
    out = Counter()
    for i in range(G.order):
        out[(G.factors[i],) + tuple(r.stat_id(i) for r in reps)] += 1
    return out


def _det_of(factors, E):
    sign = 1
    e = 0
    for ln, x in factors:
        if ln % 2 == 0:
            sign = -sign
        e += x
    return sign, e % E


def _MV(factors, n):
    return n - sum(1 for _, e in factors if e == 0)


def _to_int(vec, E) -> int:
    x = CycloNum.from_powers(E, [int(v) for v in vec])
    if not x.is_rational():
        raise SeriesError(f"det-weighted sum did not cancel to a rational: {x}")
    q = x.to_fraction()
    if q.denominator != 1:
        raise SeriesError("non-integer coefficient")
    return q.numerator


def truncation_order(G) -> int:
    return G.num_reflections + 2


_series_cache: dict = {}


def _factor_series(factors, E, D):
    """prod 1/(1 - zeta_E^e q^l) to order D, as an int64 array (D+1, E)."""
    key = (factors, E, D)
    S = _series_cache.get(key)
    if S is not None:
        return S
    S = np.zeros((D + 1, E), dtype=np.int64)
    S[0, 0] = 1
    for ln, e in factors:
        for j in range(ln, D + 1):
            S[j] += np.roll(S[j - ln], e)
    if len(_series_cache) > 20000:
        _series_cache.clear()
    _series_cache[key] = S
    return S


def _weighted_series(G, rep=None, dual=False, D=None) -> list[CycloNum]:
    """(1/|G|) sum_g chi(g) / det(1 - q g) to order D (chi = 1 when rep is None)."""
    D = D if D is not None else truncation_order(G)
    E = G.E
    cen = census(G, (rep,) if rep is not None else ())
    buckets = {}
    for key, cnt in cen.items():
        factors = key[0]
        chi = key[1][1] if rep is not None else None
        if chi is not None and dual:
            chi = chi.conj()
        ck = chi.key() if chi is not None else None
        if ck not in buckets:
            buckets[ck] = [chi, np.zeros((D + 1, E), dtype=np.int64)]
        buckets[ck][1] += cnt * _factor_series(factors, E, D)
    out = [CycloNum.rational(0, 1)] * (D + 1)
    for chi, S in buckets.values():
        for k in range(D + 1):
            v = CycloNum.from_powers(E, [int(x) for x in S[k]])
            if chi is not None:
                v = v * chi
            out[k] = out[k] + v
    return [x * Fraction(1, G.order) for x in out]


def molien_series(G, D=None) -> UniSeries:
    D = D if D is not None else truncation_order(G)
    vals = _weighted_series(G, None, D=D)
    coeffs = []
    for x in vals:
        if not x.is_rational():
            raise SeriesError("Molien series has a non-rational coefficient")
        coeffs.append(x.to_fraction())
    return UniSeries(coeffs, D)


_degree_cache: dict = {}


def molien_degrees(G) -> list[int]:
    """Degrees by peeling factors 1/(1 - q^d) off the Molien series."""
    if G.name in _degree_cache:
        return _degree_cache[G.name]
    M = molien_series(G)
    cur = M
    degs = []
    for _ in range(G.rank):
        d = next((k for k in range(1, cur.D + 1) if cur[k] != 0), None)
        if d is None or cur[d] < 0:
            raise SeriesError("degree peeling failed: corrupted group data")
        degs.append(d)
        cur = cur.times_binomial(d)
    if any(cur[k] != (1 if k == 0 else 0) for k in range(cur.D + 1)):
        raise SeriesError("degree peeling left a nontrivial residual")
    _degree_cache[G.name] = degs
    return degs


def fake_degree_poly(G, rep: EpsRep | None = None, dual: bool = False) -> list[int]:
    """Coefficients of prod(1 - q^d_i) (1/|G|) sum chi(g)/det(1 - q g)."""
    D = truncation_order(G)
    rep = rep if rep is not None else reflection_rep(G)
    vals = _weighted_series(G, rep, dual=dual, D=D)
    for d in molien_degrees(G):
        vals = [vals[k] - (vals[k - d] if k >= d else 0) for k in range(D + 1)]
    out = []
    for k, x in enumerate(vals):
        if not x.is_rational() or x.to_fraction().denominator != 1 or x.to_fraction() < 0:
            raise SeriesError(f"fake-degree coefficient {x} at q^{k} is not a nonnegative integer")
        out.append(x.to_fraction().numerator)
    if any(out[G.num_reflections + 1:]):
        raise SeriesError("fake-degree polynomial exceeds the coinvariant top degree")
    return out


def fake_degrees(G, rep: EpsRep | None = None, dual: bool = False) -> list[int]:
    """Fake degrees (with multiplicity) of rep (default: the reflection representation)."""
    poly = fake_degree_poly(G, rep, dual)
    out = []
    for k, c in enumerate(poly):
        out += [k] * c
    dim = rep.dim if rep is not None else G.rank
    if len(out) != dim:
        raise SeriesError(f"total multiplicity {len(out)} differs from dimension {dim}: "
                          f"representation reducible or convention error")
    return out


# ---------------------------------------------------------------------------
# left-hand sides

def lhs_solomon(G, signed: bool = False) -> list[int]:
    """sum_g x^{M_V(g)} (optionally weighted by det g) as a coefficient list."""
    E, n = G.E, G.rank
    acc = np.zeros((n + 1, E), dtype=np.int64)
    for key, cnt in census(G).items():
        f = key[0]
        M = _MV(f, n)
        if signed:
            sign, e = _det_of(f, E)
            acc[M, e] += sign * cnt
        else:
            acc[M, 0] += cnt
    out = [_to_int(acc[k], E) for k in range(n + 1)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def lhs_two_orbit(G, rep: EpsRep, signed: bool = False) -> BiPoly:
    """sum_g (x/y)^{M_rep(g)} y^{M_V(g)} (optionally det-weighted)."""
    E, n = G.E, G.rank
    acc = defaultdict(lambda: np.zeros(E, dtype=np.int64))
    for key, cnt in census(G, (rep,)).items():
        f, (Mr, _) = key[0], key[1]
        MV = _MV(f, n)
        if Mr > MV:
            raise SeriesError(f"dominance violated: M_rep = {Mr} > M_V = {MV}")
        if signed:
            sign, e = _det_of(f, E)
            acc[(Mr, MV - Mr)][e] += sign * cnt
        else:
            acc[(Mr, MV - Mr)][0] += cnt
    return BiPoly({k: _to_int(v, E) for k, v in acc.items()})


# ---------------------------------------------------------------------------
# invariant tables and right-hand sides

@dataclass
class OrbitData:
    label: str
    n_eps: int
    well_restricted: bool
    hyperplanes: int
    reflections: int
    reflexponents: list = field(default_factory=list)
    coreflexponents: list = field(default_factory=list)
    modified: bool = False  # substitute data (U_t / U'_t) for a non-well-restricted orbit
    rep_kind: str = ""


@dataclass
class InvariantTable:
    name: str
    rank: int
    order: int
    degrees: list
    exponents: list
    coexponents: list
    well_generated: bool
    orbits: dict  # label -> OrbitData
    monomial: tuple | None = None  # (m, b, n) for the infinite family
    irreducible: bool = True

    @property
    def num_reflections(self):
        return sum(o.reflections for o in self.orbits.values())

    @property
    def num_hyperplanes(self):
        return sum(o.hyperplanes for o in self.orbits.values())

    def check(self) -> dict:
        """Numerology: e_i + 1 = d_i; sums of (co)exponents; per-orbit sums;
        well-generated dualities.  Returns name -> bool."""
        res = {}
        res["degrees = exponents + 1"] = sorted(self.degrees) == sorted(e + 1 for e in self.exponents)
        prod = 1
        for d in self.degrees:
            prod *= d
        res["order = prod degrees"] = prod == self.order
        res["sum e = |R|"] = sum(self.exponents) == self.num_reflections
        res["sum e* = |H|"] = sum(self.coexponents) == self.num_hyperplanes
        for lab, o in self.orbits.items():
            if o.reflexponents:
                res[f"sum {lab}_i = |R_{lab}|"] = sum(o.reflexponents) == o.reflections
                res[f"sum {lab}*_i = |H_{lab}|"] = sum(o.coreflexponents) == o.hyperplanes
        if self.well_generated and self.irreducible:
            e, es, n = sorted(self.exponents), sorted(self.coexponents), self.rank
            res["e_i + e*_{n+1-i} = e_n + 1"] = all(e[i] + es[n - 1 - i] == e[-1] + 1 for i in range(n))
            for lab, o in self.orbits.items():
                if o.well_restricted and o.reflexponents:
                    r, rs, k = sorted(o.reflexponents), sorted(o.coreflexponents), len(o.reflexponents)
                    res[f"{lab}_i + {lab}*_(k+1-i) = e_n + 1"] = all(
                        r[i] + rs[k - 1 - i] == e[-1] + 1 for i in range(k))
        return res

    def to_json(self):
        return {
            "group": self.name, "rank": self.rank, "order": self.order,
            "degrees": self.degrees, "exponents": self.exponents, "coexponents": self.coexponents,
            "well_generated": self.well_generated,
            "orbits": {lab: {"n_eps": o.n_eps, "well_restricted": o.well_restricted,
                             "hyperplanes": o.hyperplanes, "reflections": o.reflections,
                             "reflexponents": o.reflexponents, "coreflexponents": o.coreflexponents,
                             "modified": o.modified}
                       for lab, o in sorted(self.orbits.items())},
        }


_table_cache: dict = {}


def orbit_reps(G, label):
    """(rep for the unsigned identity, rep supplying the co-reflexponents, modified?)."""
    if G.well_restricted[label]:
        r = eps_rep(G, label)
        return r, r, False
    sub = substitute_reps(G)
    if sub is None:
        return None, None, False
    return sub[0], sub[1], True


def invariant_table(G) -> InvariantTable:
    if G.name in _table_cache:
        return _table_cache[G.name]
    degs = molien_degrees(G)
    exps = fake_degrees(G)
    coexps = fake_degrees(G, dual=True)
    orbits = {}
    for lab, o in G.orbits.items():
        od = OrbitData(lab, G.n_eps.get(lab, 0), G.well_restricted[lab], o.hyperplanes, o.reflections)
        r, rco, modified = orbit_reps(G, lab)
        if r is not None:
            od.reflexponents = fake_degrees(G, r)
            if modified:
                co = fake_degrees(G, rco)
                od.coreflexponents = sorted(co + [0] * (r.dim - rco.dim))
            else:
                od.coreflexponents = fake_degrees(G, r, dual=True)
            od.modified = modified
            od.rep_kind = r.kind
        orbits[lab] = od
    mono = (G.m, G.b, G.n) if isinstance(G, MonomialGroup) else None
    T = InvariantTable(G.name, G.rank, G.order, degs, exps, coexps, G.well_generated, orbits, mono,
                       G.irreducible)
    _table_cache[G.name] = T
    return T


def pair_reflexponents(table: InvariantTable, label: str, signed: bool, data=None):
    """Factors (a_i, b_i), i = 1..n, of the right-hand side prod(1 +- a_i x +- b_i y).

    Reflexponents (co-reflexponents when signed), sorted ascending, are matched
    to the top of the ascending (co)exponents, i.e. index i pairs with
    i + n - n_eps; unmatched (co)exponents pair with 0.  For G(ab,b,n) with
    a, b > 1 and the orbit s, the single reflexponent pairs with the exponent an-1.
    """
    o = table.orbits[label]
    refl = sorted(data if data is not None else (o.coreflexponents if signed else o.reflexponents))
    base = sorted(table.coexponents if signed else table.exponents)
    n, k = len(base), len(refl)
    paired = [0] * n
    mono = table.monomial
    special = (mono is not None and label == "s" and not signed and mono[0] // mono[1] > 1
               and mono[1] > 1 and mono[2] > 1)
    if special:
        a = mono[0] // mono[1]
        target = a * mono[2] - 1
        idx = max(i for i, e in enumerate(base) if e == target)
        paired[idx] = refl[0]
    else:
        for i in range(k):
            paired[i + n - k] = refl[i]
    factors = [(p, e - p) for p, e in zip(paired, base)]
    if any(b < 0 for _, b in factors):
        raise SeriesError(f"pairing produced a negative coefficient: {factors}")
    return factors


def rhs_two_orbit(table: InvariantTable, label: str, signed: bool = False, data=None) -> BiPoly:
    factors = pair_reflexponents(table, label, signed, data)
    s = -1 if signed else 1
    return BiPoly.product([(s * a, s * b) for a, b in factors])


# ---------------------------------------------------------------------------
# factorization into linear factors

def factor_bivariate_linear(p: BiPoly, count: int | None = None):
    """Factor p = prod (1 + a_i x + b_i y) over Z; returns the list of (a_i, b_i)
    (trivial factors (0,0) omitted) or None.  With ``count``, exactly that many
    nontrivial factors are required."""
    if p.coeff(0, 0) != 1 or (count is not None and p.degree() != count):
        return None
    deg = p.degree()
    if deg == 0:
        return [] if p.t == {(0, 0): 1} else None
    # all factors lie among (a, b) with |a| <= sum |a_i| etc.; bound by the
    # degree-one coefficients and the total number of factors
    A, B = p.coeff(1, 0), p.coeff(0, 1)
    out = []
    cur = p
    for _ in range(deg):
        f = _find_linear_factor(cur, A, B)
        if f is None:
            return None
        a, b, q = f
        out.append((a, b))
        cur = q
        A, B = cur.coeff(1, 0), cur.coeff(0, 1)
    if cur.t != {(0, 0): 1}:
        return None
    return out


def _divide_linear(p: BiPoly, a: int, b: int):
    """Exact division of p by (1 + a x + b y), or None."""
    # process monomials by increasing total degree: q_{ij} = p_{ij} - a q_{i-1,j} - b q_{i,j-1}
    deg = p.degree()
    q = {}
    for t in range(deg):
        for i in range(t + 1):
            j = t - i
            v = p.coeff(i, j) - a * q.get((i - 1, j), 0) - b * q.get((i, j - 1), 0)
            if v:
                q[(i, j)] = v
    Q = BiPoly(q)
    if Q * BiPoly.linear(a, b) != p:
        return None
    return Q


def _find_linear_factor(p: BiPoly, A: int, B: int):
    deg = p.degree()
    # the top-degree homogeneous part is prod (a_i x + b_i y); a factor's (a, b)
    # has |a| <= max(|A|, bound) -- search a box sized by the coefficients
    bound_a = max(abs(A), 1) + sum(abs(v) for (i, j), v in p.t.items() if i + j == 1)
    bound_b = bound_a
    cands = []
    for a in range(-bound_a, bound_a + 1):
        for b in range(-bound_b, bound_b + 1):
            if a == 0 and b == 0:
                continue
            cands.append((abs(a) + abs(b), a, b))
    cands.sort()
    # quick filter: the top homogeneous part must vanish at (x, y) = (b, -a)... only when deg>0
    top = {(i, j): v for (i, j), v in p.t.items() if i + j == deg}
    for _, a, b in cands:
        if top and sum(v * (b ** i) * ((-a) ** j) for (i, j), v in top.items()) != 0:
            continue
        Q = _divide_linear(p, a, b)
        if Q is not None:
            return a, b, Q
    return None


# ---------------------------------------------------------------------------
# verification

def _pairings(table, label, signed, data):
    """The top-aligned pairing (index shift n - n_eps) first, then every other injective reindexing."""
    import itertools
    first = pair_reflexponents(table, label, signed, data)
    yield "aligned", first
    o = table.orbits[label]
    refl = sorted(data if data is not None else (o.coreflexponents if signed else o.reflexponents))
    base = sorted(table.coexponents if signed else table.exponents)
    n, seen = len(base), {tuple(first)}
    for pos in itertools.permutations(range(n), len(refl)):
        paired = [0] * n
        for r, p in zip(refl, pos):
            paired[p] = r
        f = tuple((p, e - p) for p, e in zip(paired, base))
        if f in seen or any(b < 0 for _, b in f):
            continue
        seen.add(f)
        yield "searched", list(f)


def verify_identity(G, label: str, signed: bool = False, data=None, search: bool = True) -> dict:
    """Compare the two-variable sum for the orbit with its product formula.

    The product uses the top-aligned reindexing; if that fails and ``search`` is
    set, every other reindexing of the (co)exponents is tried (the identity only
    asserts that one exists).  The report records which pairing matched.
    """
    table = invariant_table(G)
    rep, _, modified = orbit_reps(G, label)
    base = {"group": G.name, "orbit": label, "signed": signed, "modified": modified}
    if rep is None:
        return {**base, "ok": False,
                "error": "orbit is not well-restricted and has no substitute representation"}
    lhs = lhs_two_orbit(G, rep, signed)
    s = -1 if signed else 1
    first = None
    try:
        for how, factors in _pairings(table, label, signed, data):
            rhs = BiPoly.product([(s * a, s * b) for a, b in factors])
            rec = {**base, "pairing": how, "lhs": format_poly(lhs),
                   "rhs": format_factors(list(reversed(factors)), signed),
                   "rhs_expanded": format_poly(rhs), "diff": format_poly(lhs - rhs),
                   "factors": [list(f) for f in factors]}
            if first is None:
                first = rec
            if lhs == rhs:
                return {**rec, "ok": True}
            if not search:
                break
    except SeriesError as exc:
        return {**base, "ok": False, "error": str(exc), "lhs": format_poly(lhs)}
    return {**first, "ok": False}
