"""Property tests for invariants that hold for all parameters."""
import itertools
from fractions import Fraction
from math import gcd

from hypothesis import given, settings, strategies as st

from reflex.exactnum import CycloNum, cyc_conj, cyc_root_of_unity
from reflex.groups import (MonomialElement, count_decoration_tuples, mono_det, mono_stat_MV,
                           stirling_numbers)
from reflex.linalg import mat_det, mat_rank

conductors = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15])


@st.composite
def cyclo(draw, N=None):
    N = N or draw(conductors)
    coeffs = draw(st.lists(st.integers(-4, 4), min_size=N, max_size=N))
    den = draw(st.integers(1, 5))
    x = CycloNum.rational(0, N)
    for k, c in enumerate(coeffs):
        x = x + cyc_root_of_unity(N, k) * c
    return x / den if den != 1 else x


@st.composite
def cyclo_triple(draw):
    N = draw(conductors)
    return draw(cyclo(N)), draw(cyclo(N)), draw(cyclo(N))


@given(cyclo_triple())
@settings(max_examples=60, deadline=None)
def test_field_laws(t):
    a, b, c = t
    assert a + b == b + a and a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == CycloNum.rational(0) and cyc_conj(cyc_conj(a)) == a
    assert cyc_conj(a * b) == cyc_conj(a) * cyc_conj(b)
    if not b.is_zero():
        assert (a / b) * b == a


@given(cyclo(), st.sampled_from([2, 3, 4, 5]))
@settings(max_examples=40, deadline=None)
def test_embedding_is_a_homomorphism(a, k):
    M = a.N * k
    assert a.embed(M) == a and hash(a.embed(M)) == hash(a)
    assert (a * a).embed(M) == a.embed(M) * a.embed(M)


@given(st.integers(1, 8), st.integers(0, 5), st.data())
@settings(max_examples=60, deadline=None)
def test_decoration_tuples_brute_force(m, j, data):
    b = data.draw(st.sampled_from([d for d in range(1, m + 1) if m % d == 0]))
    a = m // b
    # j-tuples from {1..m-1}: sums divisible by lcm(a, b), and by b but not lcm(a, b)
    L = a * b // gcd(a, b)
    tot_m = tot_a = 0
    for tup in itertools.product(range(1, m), repeat=j):
        s = sum(tup)
        if s % L == 0:
            tot_m += 1
        elif s % b == 0:
            tot_a += 1
    assert count_decoration_tuples(m, a, b, j) == (tot_m, tot_a)


@given(st.integers(1, 7))
def test_stirling(n):
    s = stirling_numbers(n)
    assert sum(s) == __import__("math").factorial(n)
    want = [1]
    for i in range(1, n):
        want = [x + i * y for x, y in zip(want + [0], [0] + want)]
    assert s == want


@st.composite
def monomial(draw, n, m):
    perm = draw(st.permutations(range(n)))
    decor = draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))
    return MonomialElement(tuple(perm), tuple(decor), m)


@given(st.integers(1, 4), st.sampled_from([1, 2, 3, 4, 6]), st.data())
@settings(max_examples=50, deadline=None)
def test_monomial_product_matches_matrices(n, m, data):
    g, h = data.draw(monomial(n, m)), data.draw(monomial(n, m))
    assert (g * h).matrix() == g.matrix() @ h.matrix()
    assert (g * g.inverse()).matrix().is_identity()
    assert mono_stat_MV(g) == mat_rank(g.matrix().minus_identity())
    assert mono_det(g) == mat_det(g.matrix())
