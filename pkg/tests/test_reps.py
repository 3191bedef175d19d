import pytest

from reflex.exactnum import CycloNum
from reflex.groups import MonomialElement, build_group
from reflex.linalg import CycMatrix, mat_rank
from reflex.reps import (NotWellRestricted, check_dominance, check_homomorphism, check_support,
                         eps_rep, eps_rep_exceptional, eps_rep_G13_U_t, eps_rep_G13_U_t_prime,
                         eps_rep_infinite_s, eps_rep_infinite_t, eps_rep_U_t, eps_rep_U_t_prime,
                         norm_squared, reflection_rep, substitute_reps)
from reflex.series import fake_degrees


def scalar(rep, g):
    return rep.chi(g).to_fraction()


def test_infinite_s_on_g212(g212):
    _, els = g212
    Vs = eps_rep_infinite_s(2, 1, 2)
    assert scalar(Vs, els["s"]) == -1 and scalar(Vs, els["t"]) == 1
    assert Vs.M(els["s"]) == 1 and Vs.M(els["t"]) == 0
    assert check_support(Vs) and check_dominance(Vs) and check_homomorphism(Vs)


def test_infinite_t_on_g212(g212):
    _, els = g212
    Vt = eps_rep_infinite_t(2, 2)
    assert Vt.M(els["u"]) == 1   # u = sts has a transposition as permutation part
    assert Vt.M(els["ut"]) == 0
    assert Vt.M(els["e"]) == 0
    assert check_support(Vt) and check_homomorphism(Vt)


def test_fig_vs_vt_columns(g212):
    """M_{V_s} and M_{V_t} columns for the eight elements of G(2,1,2)."""
    _, els = g212
    Vs, Vt = eps_rep_infinite_s(2, 1, 2), eps_rep_infinite_t(2, 2)
    # s, v = tst are the coordinate reflections; t, u = sts the transposition ones
    ms = {k: Vs.M(els[k]) for k in ("e", "s", "t", "u", "v", "st", "ts", "ut")}
    mt = {k: Vt.M(els[k]) for k in ("e", "s", "t", "u", "v", "st", "ts", "ut")}
    assert ms == {"e": 0, "s": 1, "t": 0, "u": 0, "v": 1, "st": 1, "ts": 1, "ut": 0}
    assert mt == {"e": 0, "s": 0, "t": 1, "u": 1, "v": 0, "st": 1, "ts": 1, "ut": 0}


def test_u_t_images_g623():
    Ut, Utp = eps_rep_U_t(6, 2, 3), eps_rep_U_t_prime(6, 2, 3)
    s = MonomialElement((0, 1, 2), (2, 0, 0), 6)
    t2 = MonomialElement((1, 0, 2), (1, 5, 0), 6)
    t2p = MonomialElement((1, 0, 2), (0, 0, 0), 6)
    e = MonomialElement.identity(3, 6)
    assert Ut.image(s).is_identity() and Utp.image(s).is_identity()
    assert Ut.image(t2) == CycMatrix([[0, -1, 0], [-1, 0, 0], [0, 0, 1]])
    assert Ut.image(t2p) == CycMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert Utp.image(t2) == Utp.image(t2p)
    assert mat_rank(Utp.image(t2).minus_identity()) == 1
    assert Ut.M(e) == 0 == Utp.M(e)
    for r in (Ut, Utp):
        assert check_support(r, "t") and check_dominance(r) and check_homomorphism(r)


def test_g13_substitute():
    Ut, Utp = eps_rep_G13_U_t(), eps_rep_G13_U_t_prime()
    G = Ut.group
    assert Ut.gen_images[0].is_identity()
    assert CycMatrix([[-1, 1], [0, 1]]) in Ut.gen_images
    assert CycMatrix([[1, 0], [1, -1]]) in Ut.gen_images
    assert mat_rank(CycMatrix([[-1, 1], [0, 1]]).minus_identity()) == 1
    # U'_t(tu) = (-1)(-1) = 1
    assert [m.rows()[0][0] for m in Utp.gen_images].count(CycloNum.rational(-1)) == 2
    assert norm_squared(Ut) == 1 == norm_squared(Utp)
    assert check_support(Ut, "t") and check_support(Utp, "t")
    assert fake_degrees(G, Ut) == [4, 8]
    assert fake_degrees(G, Utp) == [12]


@pytest.mark.parametrize("name,orbit,dim,fake", [
    ("G5", "s", 1, [8]), ("G28", "t", 2, [4, 8]), ("G26", "t", 2, [9, 15]), ("G26", "s", 1, [9]),
])
def test_exceptional_eps_reps(name, orbit, dim, fake):
    rep = eps_rep_exceptional(name, orbit)
    assert rep.dim == dim
    assert fake_degrees(rep.group, rep) == fake
    assert norm_squared(rep) == 1
    assert check_support(rep) and check_dominance(rep)


def test_not_well_restricted_raises():
    with pytest.raises(NotWellRestricted):
        eps_rep(build_group("G(6,2,3)"), "t")
    with pytest.raises(NotWellRestricted):
        eps_rep(build_group("G13"), "t")
    assert substitute_reps(build_group("G(6,2,3)")) is not None
    assert substitute_reps(build_group("G(2,1,3)")) is None


def test_reflection_rep_irreducible():
    for spec in ("G(2,1,2)", "G(4,2,3)", "G4", "G28"):
        assert norm_squared(reflection_rep(build_group(spec))) == 1
