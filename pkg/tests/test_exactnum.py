from fractions import Fraction

import pytest

from reflex.exactnum import (CycloDivisionByZero, CycloNum, cyc_arith, cyc_conj, cyc_root_of_unity,
                             cyclotomic_poly, root_exponent, totient)


def z(N, k=1):
    return cyc_root_of_unity(N, k)


def test_root_of_unity_examples():
    assert z(2) == CycloNum.rational(-1)
    assert (z(3, 0) + z(3, 1) + z(3, 2)).is_zero()
    assert z(4) * z(4) == CycloNum.rational(-1)


def test_arith_examples():
    assert cyc_arith(z(5), z(5, 4), "mul") == CycloNum.rational(1)
    one = CycloNum.rational(1, 3)
    assert cyc_arith(one + z(3), one + z(3, 2), "mul") == CycloNum.rational(1)
    assert z(3).embed(6) == z(6, 2)


def test_conj_examples():
    assert cyc_conj(z(8)) == z(8, 7)
    assert cyc_conj(CycloNum.rational(-1)) == CycloNum.rational(-1)
    assert cyc_conj(1 + z(3)) == 1 + z(3, 2)


def test_division_and_inverse():
    a = 2 + z(5) - z(5, 3)
    assert a / a == CycloNum.rational(1, 5)
    assert (a * a.inverse()) == CycloNum.rational(1)
    with pytest.raises((CycloDivisionByZero, ZeroDivisionError)):
        a / CycloNum.rational(0, 5)


def test_mixed_conductors_and_rationals():
    assert z(4) * z(3) == z(12, 7)
    assert (z(4) + Fraction(1, 2)).coeffs()[0] == Fraction(1, 2)
    assert CycloNum.rational(Fraction(3, 4)).to_fraction() == Fraction(3, 4)


def test_cyclotomic_data():
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert [totient(n) for n in (1, 2, 6, 12, 13)] == [1, 1, 2, 4, 12]
    assert root_exponent(z(12, 5)) == 5


def test_hash_consistent_across_conductors():
    assert hash(z(3).embed(6)) == hash(z(6, 2))
    assert len({z(3), z(6, 2), z(12, 4)}) == 1
