import pytest

import reflex.weylpoincare as W
from reflex.reference import C2_AFFINE_RATIO, C2_FINITE, PINNED_ORDERS
from reflex.rootsys import build_root_system as root_system
from reflex.weylpoincare import (affine_rhs_corrected, affine_rhs_printed, affine_rhs_unweighted,
                                 affine_weighted_series, chevalley_order, chevalley_order_classical,
                                 closed_form_finite, dihedral_two_param, enumerate_weyl,
                                 finite_weighted_poincare, macdonald_factors, macdonald_product,
                                 pdiv_exact, pmul, qint, series_div, weighted_stat)

WEIGHTED = [("B", 2), ("B", 3), ("B", 4), ("B", 5), ("C", 2), ("C", 3), ("C", 4), ("C", 5),
            ("F", 4), ("G", 2), ("A", 2), ("A", 3)]


def test_weyl_enumeration_sizes():
    assert len(enumerate_weyl(root_system("C", 2))) == 8
    assert len(enumerate_weyl(root_system("A", 1))) == 2
    assert len(enumerate_weyl(root_system("B", 3))) == 48


def test_c2_elements_and_stats():
    """Inversion sets and weighted lengths of the eight elements of W(C2), with s the long reflection."""
    R = root_system("C", 2)
    by_word = {w.word: w for w in enumerate_weyl(R)}
    s, t = 1, 0
    assert weighted_stat(by_word[()], R) == 0
    assert weighted_stat(by_word[(s, t)], R) == 3
    assert weighted_stat(by_word[(s, t, s)], R) == 5
    assert sorted(weighted_stat(w, R) for w in by_word.values()) == [0, 1, 2, 3, 3, 4, 5, 6]
    for w in by_word.values():
        assert w.length == len(w.word)
        for a in w.inversions:
            assert all(x <= 0 for x in w.apply(a))


@pytest.mark.parametrize("typ,n", WEIGHTED)
def test_finite_three_way(typ, n):
    R = root_system(typ, n)
    f = finite_weighted_poincare(R)
    assert f == closed_form_finite(R) == macdonald_product(R)


def test_finite_examples():
    assert finite_weighted_poincare(root_system("C", 2)) == list(C2_FINITE)
    assert finite_weighted_poincare(root_system("A", 2)) == pmul([1, 1], [1, 1, 1])
    # G2: (1+q^4+q^8)/(1+q+q^2) * (q^2-1)(q^6-1)/(q-1)^2
    num = pmul(pmul([1, 0, 0, 0, 1, 0, 0, 0, 1], qint(2)), qint(6))
    assert finite_weighted_poincare(root_system("G", 2)) == pdiv_exact(num, qint(3))


def test_macdonald_product_shapes():
    R = root_system("C", 2)
    num, den = macdonald_factors(R)
    # (w, Ht) = (1,1), (2,2), (1,3), (2,4)
    assert (num, den) == ([2, 4, 4, 6], [1, 2, 3, 4])
    for typ, n in (("A", 2), ("A", 3), ("D", 4)):
        R = root_system(typ, n)
        want = [1]
        for d in W.degrees(R):
            want = pmul(want, qint(d))
        assert macdonald_product(R) == want
    assert [macdonald_factors(root_system(t, 5))[k][-1] for t in "BC" for k in (0, 1)] == [18, 16, 12, 10]


def test_affine_c2_ratio():
    R = root_system("C", 2)
    C = 6
    ratio = series_div(affine_weighted_series(R, C), finite_weighted_poincare(R), C)
    assert ratio == list(C2_AFFINE_RATIO)


def test_affine_trivial_cutoff():
    for typ, n in (("C", 2), ("G", 2), ("A", 2)):
        assert affine_weighted_series(root_system(typ, n), 0) == [1]


@pytest.mark.parametrize("typ,n", [("B", 2), ("C", 3), ("G", 2), ("B", 3)])
def test_affine_corrected_and_unit(typ, n):
    R = root_system(typ, n)
    C = 14
    assert affine_weighted_series(R, C) == affine_rhs_corrected(R, C)
    assert affine_weighted_series(R, C, unit=True) == affine_rhs_unweighted(R, C)


def test_affine_printed_product_differs():
    # the printed product overcounts statistic-1 alcoves of C2 (see the decisions ledger)
    R = root_system("C", 2)
    assert affine_weighted_series(R, 3) == [1, 2, 2, 4]
    assert affine_rhs_printed(R, 3)[:2] == [1, 3]


def test_affine_backends_agree():
    R = root_system("G", 2)
    assert affine_weighted_series(R, 16, backend="python") == affine_weighted_series(R, 16)


@pytest.mark.parametrize("b", [2, 3, 4, 5])
def test_dihedral(b):
    r = dihedral_two_param(b)
    assert r["ok"] and r["bivariate_ok"] and r["specialized_ok"]
    assert r["order"] == 4 * b


def test_dihedral_examples():
    r = dihedral_two_param(2)
    # (1+q1)(1+q2)(1+q1 q2)
    assert r["bivariate"] == {"0,0": 1, "1,0": 1, "0,1": 1, "1,1": 2, "2,1": 1, "1,2": 1, "2,2": 1}
    # q1 = q2 = q gives the ordinary Poincare polynomial of the dihedral group of order 4b
    for b in (2, 3, 4):
        r = dihedral_two_param(b)
        unweighted = [0] * (2 * b + 1)
        for key, c in r["bivariate"].items():
            i, j = map(int, key.split(","))
            unweighted[i + j] += c
        assert unweighted == [1] + [2] * (2 * b - 1) + [1]
    # b = 4 specialization: (1+q^5+q^10+q^15)/[4]_q * (q^2-1)(q^8-1)/(q-1)^2
    num = pmul(pmul([1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1], qint(2)), qint(8))
    assert dihedral_two_param(4)["specialized"] == pdiv_exact(num, qint(4))


def test_chevalley_pinned():
    for (tw, n, q), val in PINNED_ORDERS.items():
        assert chevalley_order(tw, q, n) == val == chevalley_order_classical(tw, q, n)


@pytest.mark.parametrize("tw,n", [("2A", 2), ("2A", 3), ("2A", 4), ("2D", 2), ("2D", 3), ("2D", 4),
                                  ("2E6", None), ("3D4", None)])
@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_chevalley_vs_classical(tw, n, q):
    assert chevalley_order(tw, q, n) == chevalley_order_classical(tw, q, n)


def test_chevalley_rejects():
    with pytest.raises(ValueError):
        chevalley_order("2B", 2, 2)
    with pytest.raises(ValueError):
        chevalley_order("3D4", 1)
