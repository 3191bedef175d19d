import pytest

from reflex.reference import MACDONALD_MAX, short_exponents_published
from reflex.rootsys import (build_root_system, dual_partition, exponents_from_heights, short_exponents,
                            weighted_height)


def test_c2_root_lengths():
    # simple-root indices follow Bourbaki: alpha_1 short, alpha_2 long (see the decisions ledger)
    R = build_root_system("C", 2)
    assert set(R.short_roots()) == {(1, 0), (1, 1)}
    assert set(R.long_roots()) == {(0, 1), (2, 1)}
    assert R.r == 2 and R.simple_weights == [1, 2]


def test_simply_laced_and_f4_counts():
    A2 = build_root_system("A", 2)
    assert len(A2.positive) == 3 and set(A2.weight.values()) == {1}
    F4 = build_root_system("F", 4)
    assert (len(F4.positive), len(F4.long_roots()), len(F4.short_roots())) == (24, 12, 12)


@pytest.mark.parametrize("typ,n", [("B", 5), ("C", 5)])
def test_weighted_height_maxima(typ, n):
    R = build_root_system(typ, n)
    ht = [weighted_height(a, R) for a in R.positive]
    top_num, top_den = MACDONALD_MAX[(typ, n)]
    assert max(ht) == top_den
    assert max(R.weight[a] + weighted_height(a, R) for a in R.positive) == top_num


def test_simple_root_weight():
    for typ, n in (("B", 3), ("C", 3), ("G", 2), ("F", 4)):
        R = build_root_system(typ, n)
        for i in range(n):
            e = tuple(1 if j == i else 0 for j in range(n))
            assert weighted_height(e, R) == R.weight[e]


def test_exponents_from_heights():
    assert exponents_from_heights(build_root_system("C", 2)) == [1, 3]
    assert exponents_from_heights(build_root_system("A", 2)) == [1, 2]
    for n in range(2, 6):
        assert exponents_from_heights(build_root_system("B", n)) == list(range(1, 2 * n, 2))
    assert exponents_from_heights(build_root_system("D", 5)) == [1, 3, 4, 5, 7]


@pytest.mark.parametrize("typ,n", [("B", 2), ("B", 3), ("B", 4), ("B", 5), ("C", 2), ("C", 3),
                                   ("C", 4), ("C", 5), ("F", 4), ("G", 2)])
def test_short_exponents(typ, n):
    assert tuple(short_exponents(build_root_system(typ, n))) == short_exponents_published(typ, n)


def test_short_exponents_empty_when_simply_laced():
    assert short_exponents(build_root_system("D", 4)) == []


def test_dual_partition_and_dual_system():
    assert dual_partition([1, 1, 2]) == [1, 2]
    B3 = build_root_system("B", 3)
    assert B3.dual().typ == "C" and len(B3.dual().positive) == 9
    assert B3.coxeter_number == 6


def test_unsupported():
    for typ, n in (("H", 3), ("F", 3), ("G", 3), ("B", 1)):
        with pytest.raises(ValueError):
            build_root_system(typ, n)
