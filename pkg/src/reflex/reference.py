"""Published invariant values, transcribed for comparison with computed ones.

All multisets are stored sorted.  ``None`` marks an orbit whose entry is only
available through the substitute (U_t / U'_t) construction.
"""
from __future__ import annotations

from math import gcd

# exceptional groups: exponents, coexponents, {orbit: (reflexponents, co-reflexponents)}
EXCEPTIONAL_TABLE = {
    "G5": ((5, 11), (1, 7), {"s": ((8,), (4,)), "t": ((8,), (4,))}),
    "G6": ((3, 11), (1, 9), {"s": ((6,), (6,)), "t": ((8,), (4,))}),
    "G7": ((11, 11), (1, 13), {"s": ((6,), (6,)), "t": ((8,), (4,)), "u": ((8,), (4,))}),
    "G9": ((7, 23), (1, 17), {"s": ((12,), (12,)), "t": ((18,), (6,))}),
    "G10": ((11, 23), (1, 13), {"s": ((16,), (8,)), "t": ((18,), (6,))}),
    "G11": ((23, 23), (1, 25), {"s": ((12,), (12,)), "t": ((16,), (8,)), "u": ((18,), (6,))}),
    "G13": ((7, 11), (1, 17), {"s": ((6,), (6,)), "t": None}),
    "G14": ((5, 23), (1, 19), {"s": ((12,), (12,)), "t": ((16,), (8,))}),
    "G15": ((11, 23), (1, 25), {"s": ((12,), (12,)), "t": ((16,), (8,)), "u": ((6,), (6,))}),
    "G17": ((19, 59), (1, 41), {"s": ((30,), (30,)), "t": ((48,), (12,))}),
    "G18": ((29, 59), (1, 31), {"s": ((40,), (20,)), "t": ((48,), (12,))}),
    "G19": ((59, 59), (1, 61), {"s": ((30,), (30,)), "t": ((40,), (20,)), "u": ((48,), (12,))}),
    "G21": ((11, 59), (1, 49), {"s": ((30,), (30,)), "t": ((40,), (20,))}),
    "G26": ((5, 11, 17), (1, 7, 13), {"s": ((9,), (9,)), "t": ((9, 15), (3, 9))}),
    "G28": ((1, 5, 7, 11), (1, 5, 7, 11), {"s": ((4, 8), (4, 8)), "t": ((4, 8), (4, 8))}),
}

# substitute (co)reflexponents for the two orbits that are not well-restricted
SUBSTITUTE_TABLE = {"G13": {"t": ((4, 8), (0, 12))}}


def substitute_monomial_t(a: int, b: int, n: int):
    """Published parametric substitute t-data for G(ab,b,n), a,b > 1, n > 2."""
    refl = sorted([k * a * (b - 1) for k in range(1, n)] + [a * n])
    corefl = sorted([k * a * b for k in range(n)])
    return tuple(refl), tuple(corefl)


def monomial_row(m: int, b: int, n: int):
    """Published row for G(m,b,n) in the parametric families with >1 hyperplane orbit.

    Returns (exponents, coexponents, {orbit: (refl, corefl) or None}) or None
    if (m, b, n) lies outside the published families."""
    a = m // b
    if b == 1 and a > 1 and n >= 2:
        e = tuple(k * a - 1 for k in range(1, n + 1))
        es = tuple(k * a + 1 for k in range(n))
        return e, es, {"s": (((a - 1) * n,), (n,)),
                       "t": (tuple(k * a for k in range(1, n)), tuple(k * a for k in range(1, n)))}
    if a > 1 and b > 1 and n > 2:
        d = gcd(a, b)
        e = tuple(sorted([k * m - 1 for k in range(1, n)] + [n * a - 1]))
        es = tuple([1] + [k * m + 1 for k in range(1, n)])
        return e, es, {"s": (((a - d) * n,), (n,)), "t": None}
    if a == 1 and n == 2 and m % 2 == 0 and m >= 4:
        h = m // 2
        return (1, m - 1), (1, m - 1), {"s": ((h,), (h,)), "t": ((h,), (h,))}
    return None


# short exponents of the two-length Weyl types
def short_exponents_published(typ: str, n: int):
    if typ == "B":
        return tuple(range(2, 2 * n - 1, 2))
    if typ == "C":
        return (n,)
    if typ == "F":
        return (4, 8)
    if typ == "G":
        return (3,)
    raise ValueError(typ)


# polynomials displayed in the worked examples (x, y variables)
SOLOMON_EXAMPLE = {
    "group": "G(2,1,2)",
    "unsigned": ("1+2y+2x+2xy+y^2", "(1+2x+y)(1+y)"),
    "signed": ("1-2y-2x+2xy+y^2", "(1-2x-y)(1-y)"),
}
EXTENSION_DISPLAYS = {
    ("G13", False): "(1+8x+3y)(1+4x+3y)",
    ("G13", True): "(1-12x-5y)(1-y)",
    ("G(6,2,3)", False): "(1+9x+2y)(1+6x+2y)(1+3x+2y)",
    # printed with the variable names q, t in place of x, y
    ("G(6,2,3)", True): "(1-12x-y)(1-6x-y)(1-y)",
}

# weighted Poincare data for C2
C2_FINITE = (1, 1, 1, 2, 1, 1, 1)
C2_AFFINE_RATIO = (1, 1, 0, 1, 2, 1, 1)
C2_NEAR_ORIGIN = (0, 1, 2, 3, 3, 4, 5, 6)
# maximal weighted-height factors of the B5 / C5 Macdonald products: (numerator, denominator)
MACDONALD_MAX = {("B", 5): (18, 16), ("C", 5): (12, 10)}

PINNED_ORDERS = {("3D4", None, 2): 211341312, ("2A", 2, 2): 25920, ("2D", 3, 2): 197406720}
