"""Exact rationals and cyclotomic field arithmetic.

Rationals are :class:`fractions.Fraction`.  Elements of Q(zeta_N) are stored
as integer numerators over a common positive denominator, reduced modulo the
N-th cyclotomic polynomial so that equality is coefficient-wise.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

Rat = Fraction

MAX_CONDUCTOR = 120

_lock = threading.Lock()


class CycloDivisionByZero(ZeroDivisionError):
    pass


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    # den monic; exact division of integer polynomials, low degree first
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            out[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _poly_divexact(num, cyclotomic_poly(d))
    return tuple(num)


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def _reduce(coeffs: list[int], n: int) -> list[int]:
    """Reduce an integer polynomial modulo Phi_n (in place semantics)."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, deg - 1, -1):
        a = c[i]
        if a:
            base = i - deg
            for j in range(deg):
                pj = phi[j]
                if pj:
                    c[base + j] -= a * pj
            c[i] = 0
    if len(c) < deg:
        c.extend([0] * (deg - len(c)))
    return c[:deg]


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coefficient vector of zeta_n^k for k = 0..n-1."""
    rows = []
    for k in range(n):
        v = [0] * max(k + 1, 1)
        v[k] = 1
        rows.append(tuple(_reduce(v, n)))
    return tuple(rows)


class CycloNum:
    """An element of Q(zeta_N) in canonical form.

    ``num`` holds phi(N) integer coefficients of 1, zeta, zeta^2, ...;
    the value is ``sum(num[k] zeta^k) / den``.
    """

    __slots__ = ("N", "num", "den", "_hash")

    def __init__(self, N: int, num: Sequence[int], den: int = 1, _canonical: bool = False):
        if not _canonical:
            if N < 1:
                raise ValueError("conductor must be positive")
            num = _reduce(list(num), N) if len(num) > totient(N) or len(num) < totient(N) else list(num)
            if den == 0:
                raise CycloDivisionByZero("zero denominator")
            if den < 0:
                den = -den
                num = [-a for a in num]
            g = den
            for a in num:
                if a:
                    g = gcd(g, a)
                    if g == 1:
                        break
            if not any(num):
                den = 1
            elif g != 1:
                num = [a // g for a in num]
                den //= g
            num = tuple(num)
        self.N = N
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def rational(cls, q, N: int = 1) -> "CycloNum":
        q = Fraction(q)
        v = [0] * totient(N)
        v[0] = q.numerator
        return cls(N, v, q.denominator)

    @classmethod
    def from_powers(cls, N: int, vec: Iterable[int], den: int = 1) -> "CycloNum":
        """Build sum(vec[k] * zeta_N^k) / den for an arbitrary-length vector."""
        table = _power_table(N)
        acc = [0] * totient(N)
        for k, a in enumerate(vec):
            if a:
                row = table[k % N]
                for j, r in enumerate(row):
                    if r:
                        acc[j] += a * r
        return cls(N, acc, den)

    # -- basic predicates --------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self.num)

    # -- conductor handling ------------------------------------------
    def embed(self, M: int) -> "CycloNum":
        """Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N)."""
        if M == self.N:
            return self
        if M % self.N:
            raise ValueError(f"conductor {self.N} does not divide {M}")
        step = M // self.N
        vec = [0] * (step * (len(self.num) - 1) + 1)
        for k, a in enumerate(self.num):
            vec[k * step] = a
        return CycloNum.from_powers(M, vec, self.den)

    def _common(self, other):
        if not isinstance(other, CycloNum):
            other = CycloNum.rational(other, self.N)
        if other.N == self.N:
            return self, other
        M = _lcm(self.N, other.N)
        return self.embed(M), other.embed(M)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        a, b = self._common(other)
        if a.den == b.den:
            return CycloNum(a.N, [x + y for x, y in zip(a.num, b.num)], a.den)
        return CycloNum(a.N, [x * b.den + y * a.den for x, y in zip(a.num, b.num)], a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.N, tuple(-x for x in self.num), self.den, _canonical=True)

    def __sub__(self, other):
        a, b = self._common(other)
        if a.den == b.den:
            return CycloNum(a.N, [x - y for x, y in zip(a.num, b.num)], a.den)
        return CycloNum(a.N, [x * b.den - y * a.den for x, y in zip(a.num, b.num)], a.den * b.den)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._common(other)
        an, bn = a.num, b.num
        if b.is_rational():
            c = bn[0]
            return CycloNum(a.N, [x * c for x in an], a.den * b.den)
        if a.is_rational():
            c = an[0]
            return CycloNum(a.N, [x * c for x in bn], a.den * b.den)
        prod = [0] * (len(an) + len(bn) - 1)
        for i, x in enumerate(an):
            if x:
                for j, y in enumerate(bn):
                    if y:
                        prod[i + j] += x * y
        return CycloNum(a.N, _reduce(prod, a.N), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise CycloDivisionByZero("division by zero in Q(zeta_%d)" % self.N)
        if self.is_rational():
            return CycloNum(self.N, [self.den] + [0] * (len(self.num) - 1), self.num[0])
        # extended Euclid in Q[x]: find u with u * a == 1 mod Phi_N
        r0 = [Fraction(c) for c in cyclotomic_poly(self.N)]
        r1 = [Fraction(c) for c in self.num]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        _trim(r1)
        while len(r1) > 1 or r1[0] != 0:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
            if len(r1) == 1 and r1[0] == 0:
                break
        # r0 is a nonzero constant
        c = r0[0]
        u = [x / c for x in s0]
        den = 1
        for x in u:
            den = _lcm(den, x.denominator)
        vec = [int(x * den) for x in u]
        return CycloNum(self.N, vec, 1) * CycloNum.rational(Fraction(self.den, den), self.N)

    def __truediv__(self, other):
        a, b = self._common(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CycloNum.rational(other, self.N) * self.inverse() if not isinstance(other, CycloNum) else other / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycloNum.rational(1, self.N)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "CycloNum":
        """Complex conjugation, zeta_N -> zeta_N^(N-1)."""
        N = self.N
        vec = [0] * N
        for k, a in enumerate(self.num):
            vec[(-k) % N] += a
        return CycloNum.from_powers(N, vec, self.den)

    def galois(self, k: int) -> "CycloNum":
        """Field automorphism zeta_N -> zeta_N^k (gcd(k, N) = 1)."""
        N = self.N
        if gcd(k, N) != 1:
            raise ValueError("k must be a unit modulo N")
        vec = [0] * N
        for j, a in enumerate(self.num):
            vec[(j * k) % N] += a
        return CycloNum.from_powers(N, vec, self.den)

    def descend(self, M: int) -> "CycloNum | None":
        """The same number expressed in Q(zeta_M), M | N, or None if it is not there."""
        N = self.N
        if N % M:
            raise ValueError("M must divide the conductor")
        if M == N:
            return self
        step = N // M
        basis = [cyc_root_of_unity(N, j * step).num for j in range(totient(M))]
        # solve sum_j c_j basis[j] = num (over Q), rows indexed by coordinates
        rows = [[Fraction(basis[j][r]) for j in range(len(basis))] + [Fraction(self.num[r], self.den)]
                for r in range(len(self.num))]
        nc = len(basis)
        piv = []
        r = 0
        for c in range(nc):
            p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            inv = 1 / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            piv.append(c)
            r += 1
        if any(row[-1] != 0 for row in rows[r:]):
            return None
        coeffs = [Fraction(0)] * nc
        for i, c in enumerate(piv):
            coeffs[c] = rows[i][-1]
        den = 1
        for q in coeffs:
            den = _lcm(den, q.denominator)
        return CycloNum(M, [int(q * den) for q in coeffs], den)

    # -- comparison / hashing ------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        if not isinstance(other, CycloNum):
            return NotImplemented
        if self.N == other.N:
            return self.den == other.den and self.num == other.num
        a, b = self._common(other)
        return a.den == b.den and a.num == b.num

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                # hash in the smallest field containing the value, so that equal
                # numbers presented over different conductors hash alike
                self._hash = _canonical_hash(self)
        return self._hash

    def key(self) -> tuple:
        return (self.num, self.den)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        terms = []
        for k, a in enumerate(self.num):
            if not a:
                continue
            c = Fraction(a, self.den)
            mono = "1" if k == 0 else (f"z{self.N}" if k == 1 else f"z{self.N}^{k}")
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)

    # -- serialization ------------------------------------------------
    def to_json(self) -> dict:
        return {"N": self.N, "c": [f"{q.numerator}/{q.denominator}" for q in self.coeffs()]}

    @classmethod
    def from_json(cls, obj: dict) -> "CycloNum":
        qs = [Fraction(s) for s in obj["c"]]
        den = 1
        for q in qs:
            den = _lcm(den, q.denominator)
        return cls(obj["N"], [int(q * den) for q in qs], den)


# -- small dense polynomial helpers over Fraction (used by inverse) ----
def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _psub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim([Fraction(x) for x in out])


def _pdivmod(a, b):
    a = _trim(list(a))
    b = _trim(list(b))
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    r = _trim(a[: len(b) - 1] or [Fraction(0)])
    return _trim(q), r


_HASHES: dict = {}


def _canonical_hash(x: CycloNum) -> int:
    key = (x.N, x.num, x.den)
    h = _HASHES.get(key)
    if h is None:
        y = next((d for d in map(x.descend, _divisors(x.N)[:-1]) if d is not None), x)
        h = _HASHES[key] = hash((y.N, y.num, y.den))
    return h


@lru_cache(maxsize=4096)
def cyc_root_of_unity(N: int, k: int) -> CycloNum:
    """zeta_N^k in canonical form."""
    if N < 1:
        raise ValueError("conductor must be positive")
    return CycloNum(N, _power_table(N)[k % N], 1, _canonical=True)


def cyc_arith(a: CycloNum, b: CycloNum, op: str) -> CycloNum:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def cyc_conj(a: CycloNum) -> CycloNum:
    return a.conj()


def root_exponent(x: CycloNum, N: int | None = None) -> int:
    """Return k with x == zeta_N^k; raise if x is not an N-th root of unity."""
    N = N or x.N
    if N % x.N:
        x = x.embed(_lcm(N, x.N))
        N = x.N
    x = x.embed(N)
    for k in range(N):
        if cyc_root_of_unity(N, k) == x:
            return k
    raise ValueError(f"{x!r} is not a {N}-th root of unity")


def reduce_powers(N: int, vec: Sequence[int]) -> CycloNum:
    """Group-ring vector sum(vec[k] zeta_N^k) as a canonical CycloNum."""
    return CycloNum.from_powers(N, vec)
