import pytest

from reflex.groups import build_group
from reflex.reference import EXTENSION_DISPLAYS, SOLOMON_EXAMPLE
from reflex.reps import eps_rep, eps_rep_G13_U_t, eps_rep_infinite_s, reflection_rep
from reflex.series import (BiPoly, factor_bivariate_linear, fake_degrees, format_factors, format_poly,
                           invariant_table, lhs_solomon, lhs_two_orbit, molien_degrees, poly_mul,
                           rhs_two_orbit, verify_identity)


# G(1,1,3) acts on C^3: the trivial summand contributes degree 1 besides the S_3 degrees 2, 3
@pytest.mark.parametrize("spec,deg", [("G(2,1,2)", [2, 4]), ("G(1,1,3)", [1, 2, 3]), ("G28", [2, 6, 8, 12])])
def test_molien_degrees(spec, deg):
    assert molien_degrees(build_group(spec)) == deg


def test_fake_degrees_examples():
    G = build_group("G(2,1,2)")
    assert fake_degrees(G) == [1, 3]
    for a, n in ((2, 2), (3, 2), (2, 3), (4, 3)):
        Vs = eps_rep_infinite_s(a, 1, n)
        assert fake_degrees(Vs.group, Vs) == [(a - 1) * n]
        assert fake_degrees(Vs.group, Vs, dual=True) == [n]
    G13 = build_group("G13")
    Ut = eps_rep_G13_U_t()
    assert fake_degrees(G13, Ut) == [4, 8]
    # U_t is real, so its dual has the same fake degrees (see the decisions ledger)
    assert fake_degrees(G13, Ut, dual=True) == [4, 8]


def test_lhs_solomon():
    G = build_group("G(2,1,2)")
    assert lhs_solomon(G) == [1, 4, 3] == poly_mul([1, 1], [1, 3])
    assert lhs_solomon(G, signed=True) == [1, -4, 3]
    assert lhs_solomon(build_group("G(1,1,1)")) == [1]


def test_lhs_two_orbit_g212():
    G = build_group("G(2,1,2)")
    Vs = eps_rep(G, "s")
    assert format_poly(lhs_two_orbit(G, Vs)) == SOLOMON_EXAMPLE["unsigned"][0]
    assert format_poly(lhs_two_orbit(G, Vs, signed=True)) == SOLOMON_EXAMPLE["signed"][0]


def test_lhs_two_orbit_g13():
    G, Ut = build_group("G13"), eps_rep_G13_U_t()
    want = BiPoly.product([(8, 3), (4, 3)])
    assert lhs_two_orbit(G, Ut) == want


def test_rhs_examples():
    T = invariant_table(build_group("G(2,1,2)"))
    assert rhs_two_orbit(T, "s") == BiPoly.product([(2, 1), (0, 1)])
    for a, n in ((2, 3), (3, 3), (3, 2)):
        T = invariant_table(build_group(f"G({a},1,{n})"))
        want = BiPoly.product([(0, a - 1)] + [(i * a, a - 1) for i in range(1, n)])
        assert rhs_two_orbit(T, "t") == want


def test_factorizer():
    p = BiPoly.product([(2, 1), (0, 1)])
    assert sorted(factor_bivariate_linear(p)) == [(0, 1), (2, 1)]
    assert sorted(factor_bivariate_linear(BiPoly({(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}))) == \
        [(0, 1), (1, 0)]
    lin = BiPoly({(0, 0): 1, (1, 0): 1, (0, 1): 1})
    assert factor_bivariate_linear(lin, count=2) is None
    assert factor_bivariate_linear(lin) == [(1, 1)]
    assert factor_bivariate_linear(p, count=2) is not None
    # 1 + x + y + x^2: no product of linear factors
    assert factor_bivariate_linear(BiPoly({(0, 0): 1, (1, 0): 1, (0, 1): 1, (2, 0): 1})) is None


@pytest.mark.parametrize("spec,signed", [("G(2,1,2)", False), ("G(2,1,2)", True),
                                         ("G13", False), ("G13", True),
                                         ("G(6,2,3)", False), ("G(6,2,3)", True)])
def test_verify_identity_examples(spec, signed):
    label = "s" if spec == "G(2,1,2)" else "t"
    r = verify_identity(build_group(spec), label, signed=signed)
    assert r["ok"], r
    if (spec, signed) in EXTENSION_DISPLAYS:
        assert r["rhs"] == EXTENSION_DISPLAYS[(spec, signed)]
    if spec == "G(2,1,2)":
        key = "signed" if signed else "unsigned"
        assert r["rhs"] == SOLOMON_EXAMPLE[key][1]
        assert format_factors(r["factors"][::-1], signed) == r["rhs"]


def test_g15_u_needs_search():
    r = verify_identity(build_group("G15"), "u")
    assert r["ok"] and r["pairing"] == "searched"
    assert not verify_identity(build_group("G15"), "u", search=False)["ok"]


def test_invariant_table_self_check():
    for spec in ("G(4,2,3)", "G26", "G(3,1,2)"):
        T = invariant_table(build_group(spec))
        assert all(T.check().values()), T.check()
