"""Exact dense linear algebra over cyclotomic fields and finite matrix groups.

A :class:`MatGroup` is enumerated once by breadth-first closure; afterwards
all group-theoretic work (subgroups, cosets, characters) runs on integer
element ids through the right/left Cayley tables, never on matrices.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from .exactnum import CycloNum, cyc_root_of_unity, totient

__all__ = [
    "CycMatrix", "MatGroup", "ClosureCapExceeded", "mat_rank", "mat_det",
    "char_series", "char_poly", "group_closure", "linear_characters",
    "LinearCharacter", "nullspace",
]


class ClosureCapExceeded(RuntimeError):
    pass


def _as_cyc(x, N: int) -> CycloNum:
    if isinstance(x, CycloNum):
        return x.embed(lcm(N, x.N)) if x.N != N else x
    return CycloNum.rational(Fraction(x), N)


class CycMatrix:
    """Square matrix with entries in Q(zeta_N), stored row-major."""

    __slots__ = ("n", "N", "e", "_key")

    def __init__(self, rows, N: int | None = None):
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        if N is None:
            N = 1
            for r in rows:
                for x in r:
                    if isinstance(x, CycloNum):
                        N = lcm(N, x.N)
        flat = []
        for r in rows:
            for x in r:
                c = _as_cyc(x, N)
                if c.N != N:  # entry conductor did not divide N
                    raise ValueError("entry conductor does not divide N")
                flat.append(c)
        self.n = n
        self.N = N
        self.e = tuple(flat)
        self._key = None

    @classmethod
    def _raw(cls, n: int, N: int, flat) -> "CycMatrix":
        m = cls.__new__(cls)
        m.n, m.N, m.e, m._key = n, N, tuple(flat), None
        return m

    @classmethod
    def identity(cls, n: int, N: int = 1) -> "CycMatrix":
        one, zero = CycloNum.rational(1, N), CycloNum.rational(0, N)
        return cls._raw(n, N, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def diag(cls, entries, N: int | None = None) -> "CycMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], N)

    def __getitem__(self, ij):
        i, j = ij
        return self.e[i * self.n + j]

    def rows(self):
        n = self.n
        return [list(self.e[i * n:(i + 1) * n]) for i in range(n)]

    def embed(self, M: int) -> "CycMatrix":
        if M == self.N:
            return self
        return CycMatrix._raw(self.n, M, [x.embed(M) for x in self.e])

    def _align(self, other: "CycMatrix"):
        if self.N == other.N:
            return self, other
        M = lcm(self.N, other.N)
        return self.embed(M), other.embed(M)

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        a, b = self._align(other)
        n = a.n
        ae, be = a.e, b.e
        out = []
        for i in range(n):
            row = ae[i * n:(i + 1) * n]
            for j in range(n):
                acc = None
                for k in range(n):
                    x = row[k]
                    if x.is_zero():
                        continue
                    y = be[k * n + j]
                    if y.is_zero():
                        continue
                    t = x * y
                    acc = t if acc is None else acc + t
                out.append(acc if acc is not None else CycloNum.rational(0, a.N))
        return CycMatrix._raw(n, a.N, out)

    __mul__ = __matmul__

    def __add__(self, other):
        a, b = self._align(other)
        return CycMatrix._raw(a.n, a.N, [x + y for x, y in zip(a.e, b.e)])

    def __sub__(self, other):
        a, b = self._align(other)
        return CycMatrix._raw(a.n, a.N, [x - y for x, y in zip(a.e, b.e)])

    def scale(self, c) -> "CycMatrix":
        c = _as_cyc(c, self.N)
        m = self.embed(lcm(self.N, c.N)) if c.N != self.N else self
        return CycMatrix._raw(m.n, m.N, [c * x for x in m.e])

    def minus_identity(self) -> "CycMatrix":
        return self - CycMatrix.identity(self.n, self.N)

    def trace(self) -> CycloNum:
        acc = CycloNum.rational(0, self.N)
        for i in range(self.n):
            acc = acc + self.e[i * self.n + i]
        return acc

    def transpose(self) -> "CycMatrix":
        n = self.n
        return CycMatrix._raw(n, self.N, [self.e[j * n + i] for i in range(n) for j in range(n)])

    def conj(self) -> "CycMatrix":
        return CycMatrix._raw(self.n, self.N, [x.conj() for x in self.e])

    def is_identity(self) -> bool:
        n = self.n
        for i, x in enumerate(self.e):
            if (x != 1) if i // n == i % n else (not x.is_zero()):
                return False
        return True

    def inverse(self) -> "CycMatrix":
        n, N = self.n, self.N
        one, zero = CycloNum.rational(1, N), CycloNum.rational(0, N)
        aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows())]
        for c in range(n):
            p = next((r for r in range(c, n) if not aug[r][c].is_zero()), None)
            if p is None:
                raise ZeroDivisionError("singular matrix")
            aug[c], aug[p] = aug[p], aug[c]
            inv = aug[c][c].inverse()
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                if r != c and not aug[r][c].is_zero():
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return CycMatrix([r[n:] for r in aug], N)

    def power(self, k: int) -> "CycMatrix":
        if k < 0:
            return self.inverse().power(-k)
        out = CycMatrix.identity(self.n, self.N)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    # canonical encoding: conductor, then row-major (numerators, denominator)
    def key(self):
        if self._key is None:
            self._key = (self.N,) + tuple((x.num, x.den) for x in self.e)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        a, b = self._align(other)
        return a.key() == b.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "CycMatrix(%r)" % (self.rows(),)

    def to_json(self):
        return {"N": self.N, "rows": [[x.to_json()["c"] for x in r] for r in self.rows()]}

    @classmethod
    def from_json(cls, obj):
        N = obj["N"]
        return cls([[CycloNum.from_json({"N": N, "c": c}) for c in r] for r in obj["rows"]], N)


# ---------------------------------------------------------------------------
# elimination

def _rows_of(m):
    return [list(r) for r in (m.rows() if isinstance(m, CycMatrix) else m)]


def mat_rank(m) -> int:
    """Rank by division-free elimination (pivot = first nonzero entry in the column)."""
    A = _rows_of(m)
    if not A:
        return 0
    nr, nc = len(A), len(A[0])
    rank = 0
    for c in range(nc):
        p = next((r for r in range(rank, nr) if not A[r][c].is_zero()), None)
        if p is None:
            continue
        A[rank], A[p] = A[p], A[rank]
        piv = A[rank]
        for r in range(rank + 1, nr):
            f = A[r][c]
            if not f.is_zero():
                A[r] = [piv[c] * x - f * y for x, y in zip(A[r], piv)]
        rank += 1
        if rank == nr:
            break
    return rank


def mat_det(m: CycMatrix) -> CycloNum:
    """Determinant by Bareiss fraction-free elimination."""
    A = _rows_of(m)
    n = len(A)
    N = m.N
    if n == 1:
        return A[0][0]
    if n == 2:
        return A[0][0] * A[1][1] - A[0][1] * A[1][0]
    sign = 1
    prev = CycloNum.rational(1, N)
    for k in range(n - 1):
        if A[k][k].is_zero():
            p = next((r for r in range(k + 1, n) if not A[r][k].is_zero()), None)
            if p is None:
                return CycloNum.rational(0, N)
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev
        prev = A[k][k]
    d = A[n - 1][n - 1]
    return d if sign == 1 else -d


def nullspace(m) -> list[list[CycloNum]]:
    """Basis of the right kernel {v : m v = 0}."""
    A = _rows_of(m)
    nr, nc = len(A), len(A[0])
    N = A[0][0].N
    piv_cols = []
    r = 0
    for c in range(nc):
        p = next((i for i in range(r, nr) if not A[i][c].is_zero()), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = A[r][c].inverse()
        A[r] = [x * inv for x in A[r]]
        for i in range(nr):
            if i != r and not A[i][c].is_zero():
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        piv_cols.append(c)
        r += 1
        if r == nr:
            break
    free = [c for c in range(nc) if c not in piv_cols]
    basis = []
    for f in free:
        v = [CycloNum.rational(0, N) for _ in range(nc)]
        v[f] = CycloNum.rational(1, N)
        for i, c in enumerate(piv_cols):
            v[c] = -A[i][f]
        basis.append(v)
    return basis


def char_poly(m: CycMatrix) -> list[CycloNum]:
    """Coefficients c_0..c_n of det(x - m), low degree first (Faddeev-LeVerrier)."""
    n, N = m.n, m.N
    p = []
    P = m
    for k in range(1, n + 1):
        p.append(P.trace())
        if k < n:
            P = P @ m
    return _newton(p, n, N)


def _newton(p, n, N):
    # elementary symmetric functions from power sums
    e = [CycloNum.rational(1, N)]
    for k in range(1, n + 1):
        acc = CycloNum.rational(0, N)
        for i in range(1, k + 1):
            t = e[k - i] * p[i - 1]
            acc = acc + t if i % 2 else acc - t
        e.append(acc * Fraction(1, k))
    # det(x - m) = sum_k (-1)^k e_k x^{n-k}
    return [e[n - j] if (n - j) % 2 == 0 else -e[n - j] for j in range(n + 1)]


def char_series(m: CycMatrix, D: int) -> list[CycloNum]:
    """Coefficients of 1/det(1 - q m) up to q^D."""
    n, N = m.n, m.N
    cp = char_poly(m)  # det(x - m) = sum cp[j] x^j ; det(1 - q m) = q^n det(1/q - m)
    den = [cp[n - i] for i in range(n + 1)]  # coefficient of q^i
    return series_inverse(den, D, N)


def series_inverse(den: Sequence[CycloNum], D: int, N: int) -> list[CycloNum]:
    zero = CycloNum.rational(0, N)
    inv0 = den[0].inverse()
    out = []
    for k in range(D + 1):
        acc = CycloNum.rational(1, N) if k == 0 else zero
        for i in range(1, min(k, len(den) - 1) + 1):
            if not den[i].is_zero():
                acc = acc - den[i] * out[k - i]
        out.append(acc * inv0)
    return out


# ---------------------------------------------------------------------------
# finite groups on element ids

class MatGroup:
    """A finite matrix group enumerated by closure.

    ``right[i, k]`` is the id of ``elements[i] @ gens[k]``; ``left[i, k]`` the id
    of ``gens[k] @ elements[i]``.  ``parent``/``pgen`` form the BFS tree, so
    ``elements[i] = elements[parent[i]] @ gens[pgen[i]]``.
    """

    def __init__(self, gens, elements, right, left, parent, pgen):
        self.gens = list(gens)
        self.elements = list(elements)
        self.index = {g.key(): i for i, g in enumerate(self.elements)}
        self.right = np.asarray(right, dtype=np.int64)
        self.left = np.asarray(left, dtype=np.int64)
        self.parent = np.asarray(parent, dtype=np.int64)
        self.pgen = np.asarray(pgen, dtype=np.int64)
        self.n = self.elements[0].n
        self.N = self.elements[0].N
        self._inv = None
        self._gen_ids = None
        self._orders = None
        self._word_counts = None

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def id_of(self, m: CycMatrix) -> int:
        return self.index[m.embed(self.N).key()]

    @property
    def gen_ids(self) -> list[int]:
        if self._gen_ids is None:
            self._gen_ids = [self.id_of(g) for g in self.gens]
        return self._gen_ids

    def word(self, i: int) -> list[int]:
        w = []
        while i != 0:
            w.append(int(self.pgen[i]))
            i = int(self.parent[i])
        return w[::-1]

    def word_counts(self) -> np.ndarray:
        """|G| x k matrix of generator multiplicities in the BFS words."""
        if self._word_counts is None:
            k = len(self.gens)
            c = np.zeros((len(self), k), dtype=np.int64)
            for i in range(1, len(self)):
                c[i] = c[self.parent[i]]
                c[i, self.pgen[i]] += 1
            self._word_counts = c
        return self._word_counts

    def right_perm(self, h: int) -> np.ndarray:
        """Permutation i -> id(elements[i] @ elements[h])."""
        perm = np.arange(len(self), dtype=np.int64)
        for k in self.word(h):
            perm = self.right[perm, k]
        return perm

    def left_perm(self, h: int) -> np.ndarray:
        """Permutation i -> id(elements[h] @ elements[i])."""
        perm = np.arange(len(self), dtype=np.int64)
        for k in reversed(self.word(h)):
            perm = self.left[perm, k]
        return perm

    def mul(self, i: int, j: int) -> int:
        for k in self.word(j):
            i = int(self.right[i, k])
        return i

    @property
    def inv(self) -> np.ndarray:
        if self._inv is None:
            G = len(self)
            k = len(self.gens)
            # left multiplication by gens[k]^{-1} as a permutation
            linv = np.empty((G, k), dtype=np.int64)
            for c in range(k):
                col = self.left[:, c]
                p = np.empty(G, dtype=np.int64)
                p[col] = np.arange(G)
                linv[:, c] = p
            inv = np.empty(G, dtype=np.int64)
            inv[0] = 0
            for i in range(1, G):  # g_i = g_p x  =>  g_i^{-1} = x^{-1} g_p^{-1}
                inv[i] = linv[inv[self.parent[i]], self.pgen[i]]
            self._inv = inv
        return self._inv

    def conj_perm(self, k: int) -> np.ndarray:
        """i -> id(x^{-1} g_i x) for generator x = gens[k]."""
        G = len(self)
        col = self.left[:, k]
        linv = np.empty(G, dtype=np.int64)
        linv[col] = np.arange(G)
        return linv[self.right[:, k]]

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            G = len(self)
            orders = np.zeros(G, dtype=np.int64)
            for i in range(G):
                if orders[i]:
                    continue
                # walk the cyclic subgroup through right multiplication by g_i
                w = self.word(i)
                cur, powers = 0, []
                while True:
                    for k in w:
                        cur = int(self.right[cur, k])
                    powers.append(cur)
                    if cur == 0:
                        break
                o = len(powers)
                for j, p in enumerate(powers, start=1):
                    if not orders[p]:
                        orders[p] = o // gcd(o, j)
            self._orders = orders
        return self._orders

    # -- subgroups ------------------------------------------------------
    def subgroup(self, gen_ids: Iterable[int]) -> np.ndarray:
        """Sorted ids of the subgroup generated by the given elements."""
        gen_ids = sorted(set(int(g) for g in gen_ids))
        G = len(self)
        perms = [self.right_perm(h) for h in gen_ids if h != 0]
        seen = np.zeros(G, dtype=bool)
        seen[0] = True
        frontier = np.array([0], dtype=np.int64)
        while frontier.size:
            nxt = []
            for p in perms:
                img = p[frontier]
                img = img[~seen[img]]
                if img.size:
                    img = np.unique(img)
                    seen[img] = True
                    nxt.append(img)
            frontier = np.concatenate(nxt) if nxt else np.zeros(0, dtype=np.int64)
        return np.nonzero(seen)[0]

    def conjugacy_closure(self, ids: Iterable[int]) -> np.ndarray:
        G = len(self)
        seen = np.zeros(G, dtype=bool)
        frontier = np.unique(np.asarray(list(ids), dtype=np.int64))
        seen[frontier] = True
        cps = [self.conj_perm(k) for k in range(len(self.gens))]
        while frontier.size:
            nxt = []
            for p in cps:
                img = p[frontier]
                img = img[~seen[img]]
                if img.size:
                    img = np.unique(img)
                    seen[img] = True
                    nxt.append(img)
            frontier = np.concatenate(nxt) if nxt else np.zeros(0, dtype=np.int64)
        return np.nonzero(seen)[0]

    def conjugacy_classes(self) -> np.ndarray:
        """Class label per element (labels ordered by first element id)."""
        G = len(self)
        label = -np.ones(G, dtype=np.int64)
        c = 0
        for i in range(G):
            if label[i] < 0:
                label[self.conjugacy_closure([i])] = c
                c += 1
        return label

    def normal_closure(self, ids: Iterable[int]) -> np.ndarray:
        cl = self.conjugacy_closure(ids)
        return self.subgroup(cl)

    def commutator_subgroup(self) -> np.ndarray:
        inv = self.inv
        gids = self.gen_ids
        comms = []
        for a in gids:
            for b in gids:
                comms.append(self.mul(self.mul(int(inv[a]), int(inv[b])), self.mul(a, b)))
        return self.normal_closure(comms)

    def coset_labels(self, sub: np.ndarray) -> np.ndarray:
        """Left cosets gH: label per element (labels ordered by first element id)."""
        G = len(self)
        perms = [self.right_perm(int(h)) for h in self.subgroup_generators(sub)]
        label = -np.ones(G, dtype=np.int64)
        c = 0
        for i in range(G):
            if label[i] >= 0:
                continue
            orb = np.array([i], dtype=np.int64)
            label[i] = c
            frontier = orb
            while frontier.size:
                nxt = []
                for p in perms:
                    img = p[frontier]
                    img = img[label[img] < 0]
                    if img.size:
                        img = np.unique(img)
                        label[img] = c
                        nxt.append(img)
                frontier = np.concatenate(nxt) if nxt else np.zeros(0, dtype=np.int64)
            c += 1
        return label

    def subgroup_generators(self, sub: np.ndarray) -> list[int]:
        """A small generating set of a subgroup given by its ids (greedy)."""
        sub = np.asarray(sub)
        target = len(sub)
        gens: list[int] = []
        cur = np.array([0])
        members = set(sub.tolist())
        for h in sub.tolist():
            if len(cur) == target:
                break
            if h not in set(cur.tolist()):
                gens.append(h)
                cur = self.subgroup(gens)
        assert set(cur.tolist()) <= members
        return gens


def group_closure(gens: Sequence[CycMatrix], cap: int = 10 ** 5) -> MatGroup:
    """Enumerate the group generated by ``gens`` breadth-first.

    Elements appear in BFS order; within each BFS layer new elements are
    sorted by canonical encoding, so the ordering is deterministic.
    """
    if not gens:
        raise ValueError("need at least one generator")
    N = 1
    for g in gens:
        N = lcm(N, g.N)
    gens = [g.embed(N) for g in gens]
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("generators of different dimensions")
    ident = CycMatrix.identity(n, N)
    elements = [ident]
    index = {ident.key(): 0}
    parent, pgen = [0], [0]
    right_rows: list[list[int]] = []
    layer = [0]
    while layer:
        found = {}
        for i in layer:
            g = elements[i]
            for k, x in enumerate(gens):
                h = g @ x
                kk = h.key()
                if kk not in index and kk not in found:
                    found[kk] = (h, i, k)
        new_layer = []
        for kk in sorted(found):
            h, i, k = found[kk]
            index[kk] = len(elements)
            new_layer.append(len(elements))
            elements.append(h)
            parent.append(i)
            pgen.append(k)
            if len(elements) > cap:
                raise ClosureCapExceeded(f"closure exceeded cap {cap}")
        layer = new_layer
    G = len(elements)
    k = len(gens)
    right = np.empty((G, k), dtype=np.int64)
    left = np.empty((G, k), dtype=np.int64)
    for i, g in enumerate(elements):
        for c, x in enumerate(gens):
            right[i, c] = index[(g @ x).key()]
            left[i, c] = index[(x @ g).key()]
    return MatGroup(gens, elements, right, left, parent, pgen)


# ---------------------------------------------------------------------------
# linear characters

class LinearCharacter:
    """A homomorphism G -> C^x with values zeta_L^{exps[i]}."""

    def __init__(self, group: MatGroup, L: int, exps: np.ndarray):
        self.group = group
        self.L = L
        self.exps = np.asarray(exps, dtype=np.int64) % L

    def __call__(self, i: int) -> CycloNum:
        return cyc_root_of_unity(self.L, int(self.exps[i]))

    def values(self) -> dict[int, CycloNum]:
        return {i: self(i) for i in range(len(self.exps))}

    def is_trivial(self) -> bool:
        return not self.exps.any()

    def conj(self) -> "LinearCharacter":
        return LinearCharacter(self.group, self.L, -self.exps)

    def __repr__(self):
        gens = [int(self.exps[g]) for g in self.group.gen_ids]
        return f"LinearCharacter(L={self.L}, gens={gens})"


def linear_characters(G: MatGroup) -> list[LinearCharacter]:
    """All linear characters, via the abelianization G/[G,G]."""
    comm = G.commutator_subgroup()
    in_comm = np.zeros(len(G), dtype=bool)
    in_comm[comm] = True
    gids = G.gen_ids
    # order of each generator modulo [G,G]
    ords = []
    for g in gids:
        cur, o = g, 1
        while not in_comm[cur]:
            cur = G.mul(cur, g)
            o += 1
        ords.append(o)
    L = 1
    for o in ords:
        L = lcm(L, o)
    counts = G.word_counts()
    chars = []
    choices = [[(L // o) * j for j in range(o)] for o in ords]
    for c in iproduct(*choices):
        cvec = np.array(c, dtype=np.int64)
        vals = counts @ cvec % L
        ok = all(np.array_equal(vals[G.right[:, k]], (vals + cvec[k]) % L) for k in range(len(G.gens)))
        if ok:
            chars.append(LinearCharacter(G, L, vals))
    expected = len(G) // len(comm)
    if len(chars) != expected:
        raise AssertionError(f"found {len(chars)} characters, expected {expected}")
    return chars
