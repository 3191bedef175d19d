"""Orbit representations V_eps and the substitutes U_t, U'_t.

A representation is consumed through two statistics per group element: M
(rank of rho(g) - 1) and the character value chi(g).  For the monomial family
these are closed formulas in the cycle signature (multiset of (cycle length,
decoration sum mod m)); the parity characters of the split two-dimensional
groups need the element itself.  For matrix groups they are tabulated per
element id.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction

import numpy as np

from .exactnum import CycloNum, cyc_root_of_unity
from .groups import MatrixReflectionGroup, MonomialElement, MonomialGroup, cycles
from .linalg import CycMatrix, linear_characters, mat_rank

__all__ = [
    "EpsRep", "reflection_rep", "eps_rep_infinite_s", "eps_rep_infinite_t", "eps_rep_U_t",
    "eps_rep_U_t_prime", "eps_rep_G13_U_t", "eps_rep_G13_U_t_prime", "eps_rep_exceptional",
    "eps_rep", "NotWellRestricted", "RepValidationError", "supported_linear_characters",
]


class NotWellRestricted(ValueError):
    pass


class RepValidationError(AssertionError):
    pass


def _rat(q, N=1):
    return CycloNum.rational(q, N)


class EpsRep:
    """A representation given by its per-element (M, chi) statistics.

    Exactly one evaluation route is populated:
      sig_fn(signature) -> (M, chi)         monomial groups, signature-determined
      elem_fn(MonomialElement) -> (M, chi)  monomial groups, element-determined
      table[i] = (M, chi)                   matrix groups, per element id
    """

    def __init__(self, group, label, kind, dim, *, sig_fn=None, elem_fn=None, table=None,
                 gen_images=None, image_fn=None, note=""):
        self.group, self.label, self.kind, self.dim = group, label, kind, dim
        self.sig_fn, self.elem_fn, self.table = sig_fn, elem_fn, table
        self.gen_images = gen_images
        self.image_fn = image_fn
        self.note = note

    @property
    def signature_only(self) -> bool:
        return self.sig_fn is not None

    def stat_signature(self, sig):
        return self.sig_fn(sig)

    def stat_element(self, g: MonomialElement):
        if self.elem_fn is not None:
            return self.elem_fn(g)
        return self.sig_fn(tuple(sorted(cycles(g))))

    def stat_id(self, i: int):
        return self.table[i]

    def M(self, g) -> int:
        return (self.stat_id(g) if isinstance(g, (int, np.integer)) else self.stat_element(g))[0]

    def chi(self, g) -> CycloNum:
        return (self.stat_id(g) if isinstance(g, (int, np.integer)) else self.stat_element(g))[1]

    def image(self, g):
        if self.image_fn is None:
            raise NotImplementedError(f"{self.kind} representation has no matrix images")
        return self.image_fn(g)

    def __repr__(self):
        return f"<EpsRep {self.group.name} {self.label} {self.kind} dim={self.dim}>"


# ---------------------------------------------------------------------------
# reflection representation (any group)

def _factors_stat(factors, n, E):
    M = n - sum(1 for _, e in factors if e == 0)
    chi = _rat(0, E)
    for ln, e in factors:
        if ln == 1:
            chi = chi + cyc_root_of_unity(E, e)
    return M, chi


def reflection_rep(G) -> EpsRep:
    n, E = G.rank, G.E
    if isinstance(G, MonomialGroup):
        return EpsRep(G, "V", "reflection", n, sig_fn=lambda sig: _factors_stat(sig, n, E),
                      image_fn=lambda g: g.matrix())
    table = [_factors_stat(f, n, E) for f in G.factors]
    return EpsRep(G, "V", "reflection", n, table=table, image_fn=lambda i: G.G.elements[i],
                  gen_images=list(G.G.gens))


# ---------------------------------------------------------------------------
# the monomial family

def _check_monomial(G):
    if not isinstance(G, MonomialGroup):
        raise TypeError("expected a monomial group G(m,b,n)")


def eps_rep_infinite_s(m: int, b: int, n: int, variant: str = "supported") -> EpsRep:
    """Linear character on the decoration sum, for the coordinate-hyperplane orbit.

    variant="supported": g -> zeta_m^{sum decor} (equals det on R_s, 1 on R_t);
    variant="literal":   g -> zeta_a^{sum decor}.  The two agree up to a Galois
    twist when gcd(a, b) = 1; otherwise the literal character is not supported
    on all of R_s (e.g. trivial for G(4,2,n)).
    """
    from .groups import build_monomial_group
    a = m // b
    if a <= 1:
        raise ValueError("orbit H_s is absent when a = m/b = 1")
    G = build_monomial_group(m, b, n)
    if variant == "supported":
        N = m
    elif variant == "literal":
        N = a
    else:
        raise ValueError(f"unknown variant {variant!r}")

    def f(sig):
        k = sum(s for _, s in sig) % N
        return (0 if k == 0 else 1), cyc_root_of_unity(N, k).embed(m)

    def img(g):
        return CycMatrix([[cyc_root_of_unity(N, sum(g.decor))]], N)

    return EpsRep(G, "s", "linear-character", 1, sig_fn=f, image_fn=img, note=variant)


def _perm_reflection_matrix(perm):
    """Permutation action on the sum-zero subspace, basis e_i - e_{i+1}."""
    n = len(perm)
    basis = [[(1 if k == i else -1 if k == i + 1 else 0) for k in range(n)] for i in range(n - 1)]
    # image of basis vector j: e_{p(j)} - e_{p(j+1)}; coordinates c with c_i - c_{i-1} pattern:
    # a sum-zero vector v has coordinates c_i = v_1 + ... + v_i in this basis
    cols = []
    for j in range(n - 1):
        v = [0] * n
        v[perm[j]] += 1
        v[perm[j + 1]] -= 1
        c, acc = [], 0
        for i in range(n - 1):
            acc += v[i]
            c.append(acc)
        cols.append(c)
    return CycMatrix([[cols[j][i] for j in range(n - 1)] for i in range(n - 1)], 1)


def _perm_stat(sig, n):
    fixed = sum(1 for ln, _ in sig if ln == 1)
    return n - len(sig), _rat(fixed - 1)


def eps_rep_infinite_t(a: int, n: int) -> EpsRep:
    """Reflection representation of the underlying symmetric group, for G(a,1,n)."""
    from .groups import build_monomial_group
    if n < 2:
        raise ValueError("n must be at least 2")
    if a <= 1:
        raise ValueError("a must exceed 1 (for a = 1 the orbit representation is V itself)")
    G = build_monomial_group(a, 1, n)
    return EpsRep(G, "t", "perm-quotient", n - 1, sig_fn=lambda sig: _perm_stat(sig, n),
                  image_fn=lambda g: _perm_reflection_matrix(g.perm))


def _ut_range(m, b, n):
    a = m // b
    if m % b or a <= 1 or b <= 1 or n <= 2:
        raise ValueError("U_t requires m = ab with a, b > 1 and n > 2")


def eps_rep_U_t(m: int, b: int, n: int) -> EpsRep:
    """Decorations reduced mod b, then the monomial representation of G(b,b,n)."""
    from .groups import build_monomial_group
    _ut_range(m, b, n)
    G = build_monomial_group(m, b, n)

    def f(sig):
        M = n - sum(1 for _, s in sig if s % b == 0)
        chi = _rat(0, m)
        for ln, s in sig:
            if ln == 1:
                chi = chi + cyc_root_of_unity(b, s).embed(m)
        return M, chi

    def img(g):
        return MonomialElement(g.perm, tuple(c % b for c in g.decor), b).matrix()

    return EpsRep(G, "t", "mod-b-quotient", n, sig_fn=f, image_fn=img)


def eps_rep_U_t_prime(m: int, b: int, n: int) -> EpsRep:
    """Decorations forgotten, then the reflection representation of S_n."""
    from .groups import build_monomial_group
    _ut_range(m, b, n)
    G = build_monomial_group(m, b, n)
    return EpsRep(G, "t'", "perm-quotient", n - 1, sig_fn=lambda sig: _perm_stat(sig, n),
                  image_fn=lambda g: _perm_reflection_matrix(g.perm))


def _parity_rep(G: MonomialGroup, label: str, which: str) -> EpsRep:
    """Linear characters of G(m,b,2), b even, separating the two transposition
    orbits: 'even' is -1 on the reflections x_2 = zeta^k x_1 with k even."""
    def f(g):
        odd_perm = g.perm[0] != 0
        e = g.decor[0] % 2 + (1 if (odd_perm and which == "even") else 0)
        return (e % 2), _rat(-1 if e % 2 else 1, G.m)

    def img(g):
        return CycMatrix([[f(g)[1]]], G.m)

    return EpsRep(G, label, "linear-character", 1, elem_fn=f, image_fn=img, note=f"parity-{which}")


def _monomial_eps_rep(G: MonomialGroup, label: str, variant="supported") -> EpsRep:
    if label not in G.orbits:
        raise KeyError(f"{G.name} has no orbit {label!r}")
    if not G.well_restricted[label]:
        raise NotWellRestricted(f"{G.name} orbit {label} is not well-restricted; "
                                f"use eps_rep_U_t / eps_rep_U_t_prime")
    if len(G.orbits) == 1:
        return reflection_rep(G)
    if G.is_dihedral_split and label != "s" or (G.is_dihedral_split and G.a == 1):
        # orbits split by the parity of k
        even_label = "s" if G.a == 1 else "t"
        return _parity_rep(G, label, "even" if label == even_label else "odd")
    if label == "s":
        return eps_rep_infinite_s(G.m, G.b, G.n, variant)
    if label == "t" and G.b == 1:
        return eps_rep_infinite_t(G.a, G.n)
    raise NotWellRestricted(f"no orbit representation for {G.name} orbit {label}")


# ---------------------------------------------------------------------------
# matrix groups

def supported_linear_characters(G: MatrixReflectionGroup, label: str):
    """Linear characters that are nontrivial exactly on the reflections of R_label."""
    out = []
    inside = set(G.orbit_reflections[label])
    for ch in linear_characters(G.G):
        if all((ch.exps[r] != 0) == (r in inside) for r in G.refl_ids):
            out.append(ch)
    return out


def _table_from_character(ch, E):
    return [((0 if e == 0 else 1), cyc_root_of_unity(ch.L, int(e)).embed(max(E, 1)) if ch.L > 1 else _rat(1, E))
            for e in ch.exps]


def _exc_linear(G: MatrixReflectionGroup, label: str) -> EpsRep:
    cands = supported_linear_characters(G, label)
    if not cands:
        raise RepValidationError(f"{G.name}: no linear character supported on R_{label}")
    # the one restricting to the reflection representation of each cyclic
    # parabolic <r>, r in R_label: chi(r) = det(r)
    chosen = []
    for ch in cands:
        ok = True
        for r in G.orbit_reflections[label]:
            det = cyc_root_of_unity(G.E, int(G.det_exp[r]))
            if cyc_root_of_unity(ch.L, int(ch.exps[r])) != det:
                ok = False
                break
        if ok:
            chosen.append(ch)
    if len(chosen) != 1:
        raise RepValidationError(f"{G.name} orbit {label}: {len(chosen)} characters restrict to det")
    ch = chosen[0]
    rep = EpsRep(G, label, "linear-character", 1, table=_table_from_character(ch, G.E),
                 gen_images=[CycMatrix([[cyc_root_of_unity(ch.L, int(ch.exps[g]))]], ch.L)
                             for g in G.G.gen_ids],
                 image_fn=lambda i: CycMatrix([[cyc_root_of_unity(ch.L, int(ch.exps[i]))]], ch.L))
    rep.character = ch
    rep.candidates = cands
    return rep


def _images_by_words(G: MatrixReflectionGroup, gen_images, check=True):
    """Extend generator images along the BFS tree and check every Cayley edge."""
    MG = G.G
    imgs = [None] * len(MG)
    dim = gen_images[0].n
    N = 1
    for x in gen_images:
        N = max(N, x.N)
    imgs[0] = CycMatrix.identity(dim, gen_images[0].N)
    for i in range(1, len(MG)):
        imgs[i] = imgs[int(MG.parent[i])] @ gen_images[int(MG.pgen[i])]
    if check:
        for i in range(len(MG)):
            for k, x in enumerate(gen_images):
                if (imgs[i] @ x).key() != imgs[int(MG.right[i, k])].key():
                    raise RepValidationError(f"{G.name}: generator images do not define a homomorphism")
    return imgs


def _table_from_images(imgs, E):
    return [(mat_rank(x.minus_identity()), x.trace().embed(_lcm(x.N, E))) for x in imgs]


def _lcm(a, b):
    from math import lcm
    return lcm(a, b)


def _solve_coords(basis, v):
    """Coordinates of v in the (column) basis, exact."""
    from .linalg import nullspace
    k = len(basis)
    n = len(v)
    # solve sum c_j basis_j = v via nullspace of [basis | -v]
    rows = [[basis[j][i] for j in range(k)] + [-v[i]] for i in range(n)]
    ns = nullspace(rows)
    for w in ns:
        if not w[k].is_zero():
            inv = w[k].inverse()
            return [x * inv for x in w[:k]]
    raise RepValidationError("vector outside the span")


def _quotient_rep(G: MatrixReflectionGroup, label: str) -> EpsRep:
    """n_eps-dimensional representation through G -> G/N ~ P, where N is the
    normal closure of the reflections outside R_label and P is a complement
    generated by n_label reflections of R_label; P acts on the span of its
    root lines."""
    from .groups import _apply
    import itertools
    MG = G.G
    k = G.n_eps[label]
    others = [r for r in G.refl_ids if G.label_of_reflection[r] != label]
    Nsub = MG.normal_closure(others)
    target = len(MG) // len(Nsub)
    inN = np.zeros(len(MG), dtype=bool)
    inN[Nsub] = True
    P = None
    for combo in itertools.combinations(G.orbit_reflections[label], k):
        sub = MG.subgroup(combo)
        if len(sub) == target and inN[sub].sum() == 1:
            P, Pgens = sub, combo
            break
    if P is None:
        raise RepValidationError(f"{G.name}: no complement generated by {k} reflections of R_{label}")
    basis = [G.line_vec[G.line_of[r]] for r in Pgens]
    rho_P = {}
    for p in P.tolist():
        m = MG.elements[p]
        cols = [_solve_coords(basis, _apply(m, v)) for v in basis]
        rho_P[p] = CycMatrix([[cols[j][i] for j in range(k)] for i in range(k)], m.N)
    labels = MG.coset_labels(Nsub)
    p_of_coset = {int(labels[p]): p for p in P.tolist()}
    imgs = [rho_P[p_of_coset[int(labels[i])]] for i in range(len(MG))]
    # homomorphism on every Cayley edge
    gen_imgs = [imgs[g] for g in MG.gen_ids]
    for i in range(len(MG)):
        for c, x in enumerate(gen_imgs):
            if (imgs[i] @ x).key() != imgs[int(MG.right[i, c])].key():
                raise RepValidationError(f"{G.name}: quotient construction is not a homomorphism")
    rep = EpsRep(G, label, "perm-quotient" if k > 1 else "linear-character", k,
                 table=_table_from_images(imgs, G.E), gen_images=gen_imgs, image_fn=lambda i: imgs[i])
    rep.complement = (Pgens, P)
    return rep


def eps_rep_exceptional(name: str, orbit: str) -> EpsRep:
    from .groups import build_exceptional
    G = build_exceptional(name)
    if orbit not in G.orbits:
        raise KeyError(f"{name} has no orbit {orbit!r}")
    if not G.well_restricted[orbit]:
        raise NotWellRestricted(f"{name} orbit {orbit} is not well-restricted; "
                                f"use the substitute representations (eps_rep_G13_U_t)")
    if len(G.orbits) == 1:
        return reflection_rep(G)
    if G.n_eps[orbit] == 1:
        return _exc_linear(G, orbit)
    return _quotient_rep(G, orbit)


def _g13_generators(G):
    """Ids of generators (s, t, u): s in R_s, t and u in R_t in different cosets
    of the normal closure of R_s."""
    MG = G.G
    ids = MG.gen_ids
    labs = [G.label_of_reflection.get(i) for i in ids]
    if sorted(labs) != ["s", "t", "t"]:
        raise RepValidationError("G13 generators are not of the form s, t, u")
    return ids, labs


def eps_rep_G13_U_t() -> EpsRep:
    from .groups import build_exceptional
    G = build_exceptional("G13")
    ids, labs = _g13_generators(G)
    S = CycMatrix.identity(2, 1)
    T = CycMatrix([[-1, 1], [0, 1]], 1)
    U = CycMatrix([[1, 0], [1, -1]], 1)
    imgs, seen_t = [], False
    for lab in labs:
        if lab == "s":
            imgs.append(S)
        else:
            imgs.append(U if seen_t else T)
            seen_t = True
    table_imgs = _images_by_words(G, imgs)
    rep = EpsRep(G, "t", "embedded-matrix", 2, table=_table_from_images(table_imgs, G.E),
                 gen_images=imgs, image_fn=lambda i: table_imgs[i])
    return rep


def eps_rep_G13_U_t_prime() -> EpsRep:
    from .groups import build_exceptional
    G = build_exceptional("G13")
    ids, labs = _g13_generators(G)
    imgs = [CycMatrix([[1 if lab == "s" else -1]], 1) for lab in labs]
    table_imgs = _images_by_words(G, imgs)
    return EpsRep(G, "t'", "linear-character", 1, table=_table_from_images(table_imgs, G.E),
                  gen_images=imgs, image_fn=lambda i: table_imgs[i])


def eps_rep(G, label: str, variant: str = "supported") -> EpsRep:
    """V_label for a well-restricted orbit of any supported group."""
    if isinstance(G, MonomialGroup):
        return _monomial_eps_rep(G, label, variant)
    return eps_rep_exceptional(G.name, label)


def substitute_reps(G):
    """(U_t, U'_t) for the two non-well-restricted cases, else None."""
    if isinstance(G, MonomialGroup):
        if G.a > 1 and G.b > 1 and G.n > 2:
            return eps_rep_U_t(G.m, G.b, G.n), eps_rep_U_t_prime(G.m, G.b, G.n)
        return None
    if G.name == "G13":
        return eps_rep_G13_U_t(), eps_rep_G13_U_t_prime()
    return None


# ---------------------------------------------------------------------------
# validation

def iter_stats(rep):
    """(weight, M_rep, chi_rep, M_V, element) over the group (elements enumerated)."""
    G = rep.group
    if isinstance(G, MonomialGroup):
        for g in G.elements():
            M, chi = rep.stat_element(g)
            yield g, M, chi
    else:
        for i in range(G.order):
            M, chi = rep.stat_id(i)
            yield i, M, chi


def check_support(rep, label=None) -> bool:
    """M_rep(r) >= 1 exactly on the reflections of the target orbit."""
    G = rep.group
    label = label or rep.label.rstrip("'")
    if isinstance(G, MonomialGroup):
        for lab, rs in G.reflections().items():
            for r in rs:
                if (rep.stat_element(r)[0] >= 1) != (lab == label):
                    return False
        return True
    for r in G.refl_ids:
        if (rep.stat_id(r)[0] >= 1) != (G.label_of_reflection[r] == label):
            return False
    return True


def check_dominance(rep) -> bool:
    G = rep.group
    V = reflection_rep(G)
    if isinstance(G, MonomialGroup):
        return all(rep.stat_element(g)[0] <= V.stat_element(g)[0] for g in G.elements())
    return all(rep.stat_id(i)[0] <= V.stat_id(i)[0] for i in range(G.order))


def norm_squared(rep) -> Fraction:
    """(1/|G|) sum |chi(g)|^2, exactly."""
    G = rep.group
    tot = _rat(0, 1)
    if isinstance(G, MonomialGroup) and rep.signature_only:
        for sig, cnt in G.signature_counts().items():
            chi = rep.stat_signature(sig)[1]
            tot = tot + chi * chi.conj() * cnt
    else:
        for _, _, chi in iter_stats(rep):
            tot = tot + chi * chi.conj()
    q = tot.to_fraction()
    return q / G.order


def check_homomorphism(rep) -> bool:
    """rho(g h) = rho(g) rho(h) for all g and all generators h."""
    G = rep.group
    if isinstance(G, MonomialGroup):
        gens = [g for _, g in G.standard_generators()]
        gimg = [rep.image(h) for h in gens]
        for g in G.elements():
            ig = rep.image(g)
            for h, ih in zip(gens, gimg):
                if (ig @ ih).key() != rep.image(g * h).key():
                    return False
        return True
    MG = G.G
    imgs = [rep.image(i) for i in range(len(MG))]
    for i in range(len(MG)):
        for k, x in enumerate(MG.gen_ids):
            if (imgs[i] @ imgs[x]).key() != imgs[int(MG.right[i, k])].key():
                return False
    return True
