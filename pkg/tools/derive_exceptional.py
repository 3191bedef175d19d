"""Derive generator matrices for the rank-2 primitive reflection groups.

The three maximal groups mu_12.T, mu_24.O and mu_60.I are built from the
binary polyhedral groups (unit quaternions as 2x2 matrices).  Every reflection
subgroup generated by a union of "reflection classes" (all reflections of a
given order dividing k on the hyperplanes of one orbit) is enumerated and
identified by its order and per-orbit (hyperplane count, reflection order).
A minimal reflection generating set of each target group is then frozen into
``src/reflex/_exceptional_data.py``.  (G23, G26 and G28 are built directly in
``reflex.groups``.)  Run once; the output is checked into the repository.
"""
from __future__ import annotations

import itertools
import pprint
import sys
from fractions import Fraction as F
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from reflex.exactnum import CycloNum, cyc_root_of_unity as z  # noqa: E402
from reflex.linalg import CycMatrix, group_closure, mat_rank  # noqa: E402

# target data: order, sorted list of (hyperplane count, reflection order) per orbit
TARGETS = {
    "G4": (24, [(4, 3)]),
    "G5": (72, [(4, 3), (4, 3)]),
    "G6": (48, [(4, 3), (6, 2)]),
    "G7": (144, [(4, 3), (4, 3), (6, 2)]),
    "G8": (96, [(6, 4)]),
    "G9": (192, [(6, 4), (12, 2)]),
    "G10": (288, [(6, 4), (8, 3)]),
    "G11": (576, [(6, 4), (8, 3), (12, 2)]),
    "G12": (48, [(12, 2)]),
    "G13": (96, [(6, 2), (12, 2)]),
    "G14": (144, [(8, 3), (12, 2)]),
    "G15": (288, [(6, 2), (8, 3), (12, 2)]),
    "G16": (600, [(12, 5)]),
    "G17": (1200, [(12, 5), (30, 2)]),
    "G18": (1800, [(12, 5), (20, 3)]),
    "G19": (3600, [(12, 5), (20, 3), (30, 2)]),
    "G20": (360, [(20, 3)]),
    "G21": (720, [(20, 3), (30, 2)]),
    "G22": (240, [(30, 2)]),
}
WANTED = ["G4", "G5", "G6", "G7", "G9", "G10", "G11", "G13", "G14", "G15", "G17", "G18", "G19", "G21"]


def quat(a, b, c, d, N):
    i = z(4, 1).embed(N)
    a, b, c, d = [x.embed(N) if isinstance(x, CycloNum) else CycloNum.rational(x, N) for x in (a, b, c, d)]
    return CycMatrix([[a + b * i, c + d * i], [-c + d * i, a - b * i]], N)


def maximal_groups():
    h = F(1, 2)
    out = {}
    N = 12
    out["tetra"] = (N, [quat(0, 1, 0, 0, N), quat(h, h, h, h, N), CycMatrix.identity(2, N).scale(z(N, 1))])
    N = 24
    r2 = z(8, 1) + z(8, 7)  # sqrt 2
    out["octa"] = (N, [quat(h, h, h, h, N), quat(r2 * h, r2 * h, 0, 0, N), CycMatrix.identity(2, N).scale(z(N, 1))])
    N = 60
    phi = -(z(5, 2) + z(5, 3))
    out["icosa"] = (N, [quat(h, h, h, h, N), quat(phi * h, (phi - 1) * h, h, 0, N),
                        CycMatrix.identity(2, N).scale(z(N, 1))])
    return out


def line_key(v):
    k = next(i for i, x in enumerate(v) if not x.is_zero())
    inv = v[k].inverse()
    return tuple((x * inv).key() for x in v)


def root_line(m: CycMatrix):
    d = m.minus_identity()
    for j in range(m.n):
        col = [d[i, j] for i in range(m.n)]
        if any(not x.is_zero() for x in col):
            return col
    raise ValueError("not a reflection")


def apply(m: CycMatrix, v):
    n = m.n
    return [sum((m[i, j] * v[j] for j in range(n)), CycloNum.rational(0, m.N)) for i in range(n)]


def analyse(G, ids, refl_ids, line_of, line_vec, gens_mats):
    """Hyperplane orbits of the subgroup with matrices gens_mats acting on lines."""
    lines = sorted({line_of[r] for r in refl_ids})
    seen, orbits = set(), []
    for L in lines:
        if L in seen:
            continue
        orb, stack = {L}, [L]
        while stack:
            cur = stack.pop()
            for g in gens_mats:
                nk = line_key(apply(g, line_vec[cur]))
                if nk not in orb:
                    orb.add(nk)
                    stack.append(nk)
        seen |= orb
        orbits.append(orb)
    data = []
    for orb in orbits:
        rs = [r for r in refl_ids if line_of[r] in orb]
        data.append((len(orb), len(rs) // len(orb) + 1))
    return sorted(data), orbits


def descend_matrix(m: CycMatrix, candidates):
    for M in candidates:
        if m.N % M:
            continue
        es = [x.descend(M) for x in m.e]
        if all(e is not None for e in es):
            return CycMatrix._raw(m.n, M, es)
    return m


def minimal_generators(G, sub_ids, refl, cond=None):
    """First minimal reflection generating set in a deterministic search."""
    sub = set(sub_ids.tolist())
    rs = [r for r in refl if r in sub]
    target = len(sub_ids)
    for size in (2, 3):
        for combo in itertools.combinations(rs, size):
            if len(G.subgroup(combo)) == target and (cond is None or cond(combo)):
                return list(combo)
    raise RuntimeError("no minimal generating set found")


def main():
    result = {}
    for fam, (N, gens) in maximal_groups().items():
        G = group_closure(gens)
        print(fam, len(G), file=sys.stderr)
        refl = [i for i, g in enumerate(G.elements) if mat_rank(g.minus_identity()) == 1]
        line_of, line_vec = {}, {}
        for r in refl:
            v = root_line(G.elements[r])
            k = line_key(v)
            line_of[r] = k
            line_vec[k] = v
        # hyperplane orbits of the maximal group
        _, orbits = analyse(G, None, refl, line_of, line_vec, G.gens)
        classes = []
        for orb in orbits:
            rs = [r for r in refl if line_of[r] in orb]
            e = len(rs) // len(orb) + 1
            opts = [[]]
            orders = G.element_orders()
            for k in range(2, e + 1):
                if e % k == 0:
                    opts.append([r for r in rs if k % orders[r] == 0])
            classes.append(opts)
        for choice in itertools.product(*classes):
            chosen = sorted(set(itertools.chain(*choice)))
            if not chosen:
                continue
            sub = G.subgroup(chosen)
            sub_refl = [r for r in refl if r in set(sub.tolist())]
            data, suborbits = analyse(G, sub, sub_refl, line_of, line_vec, [G.elements[r] for r in chosen])
            for name, (order, tdata) in TARGETS.items():
                if name in WANTED and name not in result and order == len(sub) and tdata == data:
                    cond = None
                    if name == "G13":
                        cond = g13_condition(G, sub, sub_refl, line_of, suborbits)
                    gens_ids = minimal_generators(G, sub, sub_refl, cond)
                    mats = [descend_matrix(G.elements[i], [1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 60])
                            for i in gens_ids]
                    M = 1
                    for m in mats:
                        M = np.lcm(M, m.N)
                    mats = [m.embed(int(M)) for m in mats]
                    result[name] = mats
                    print(name, len(sub), data, "conductor", M, file=sys.stderr)
    return result


def g13_condition(G, sub, sub_refl, line_of, suborbits):
    """Generators s, t, u with s in the 6-hyperplane orbit and t, u in the
    12-hyperplane orbit lying in different cosets of the normal closure of
    the s-reflections (so the displayed S3 representation factors through)."""
    small = [o for o in suborbits if len(o) == 6][0]
    rs_s = [r for r in sub_refl if line_of[r] in small]
    N = set(G.normal_closure(rs_s).tolist()) & set(sub.tolist())

    def cond(combo):
        if len(combo) != 3:
            return False
        s = [r for r in combo if line_of[r] in small]
        t = [r for r in combo if line_of[r] not in small]
        if len(s) != 1 or len(t) != 2:
            return False
        a, b = t
        # a^{-1} b in N  <=>  same coset
        return G.mul(int(G.inv[a]), b) not in N
    return cond


def serialize(mats):
    return {"conductor": mats[0].N, "gens": [[[x.to_json()["c"] for x in row] for row in m.rows()] for m in mats]}


if __name__ == "__main__":
    res = main()
    missing = [w for w in WANTED if w not in res]
    if missing:
        raise SystemExit(f"missing {missing}")
    # G13 order of generators: s first, then t, u
    data = {name: serialize(res[name]) for name in WANTED}
    out = Path(__file__).resolve().parents[1] / "src" / "reflex" / "_exceptional_data.py"
    text = ('"""Generator matrices of rank-2 primitive reflection groups (derived by\n'
            'tools/derive_exceptional.py; entries are coefficient lists in powers of\n'
            'zeta_conductor)."""\n\nRANK2_GENERATORS = ' + pprint.pformat(data, width=100, compact=True) + "\n")
    out.write_text(text)
    print("wrote", out, file=sys.stderr)
