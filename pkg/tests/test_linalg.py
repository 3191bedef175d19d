from reflex.exactnum import CycloNum, cyc_root_of_unity
from reflex.groups import exceptional_generators
from reflex.linalg import (CycMatrix, char_series, group_closure, linear_characters, mat_det,
                           mat_rank, nullspace)


def test_rank_examples(g212):
    _, els = g212
    I = CycMatrix.identity(2)
    assert mat_rank(I - I) == 0
    assert mat_rank(els["s"].matrix().minus_identity()) == 1
    assert mat_rank(els["st"].matrix().minus_identity()) == 2


def test_det_examples(g212):
    _, els = g212
    assert mat_det(CycMatrix.identity(3)) == CycloNum.rational(1)
    z3 = cyc_root_of_unity(3, 1)
    assert mat_det(CycMatrix.diag([z3, 1])) == z3
    assert mat_det(els["ut"].matrix()) == CycloNum.rational(1)


def test_char_series_examples():
    as_int = lambda s: [c.to_fraction() for c in s]
    assert as_int(char_series(CycMatrix.identity(2), 2)) == [1, 2, 3]
    assert as_int(char_series(CycMatrix.diag([-1, 1]), 2)) == [1, 0, 1]
    z3 = cyc_root_of_unity(3, 1)
    assert as_int(char_series(CycMatrix.diag([z3, z3 * z3]), 3)) == [1, -1, 0, 1]


def test_closure_orders(g212):
    _, els = g212
    assert len(group_closure([els["s"].matrix(), els["t"].matrix()])) == 8
    assert len(group_closure(exceptional_generators("G5"))) == 72
    assert len(group_closure(exceptional_generators("G28"))) == 1152


def test_linear_characters(g212):
    _, els = g212
    G = group_closure([els["s"].matrix(), els["t"].matrix()])
    chars = linear_characters(G)
    assert len(chars) == 4 == len(G) // len(G.commutator_subgroup())
    assert any(c.is_trivial() for c in chars)
    s, t = G.gen_ids
    vals = {(c(s).to_fraction(), c(t).to_fraction()) for c in chars}
    assert (-1, 1) in vals and (1, -1) in vals


def test_nullspace_and_inverse():
    m = CycMatrix([[1, 2], [2, 4]])
    ns = nullspace(m)
    assert len(ns) == 1
    z = cyc_root_of_unity(5, 1)
    a = CycMatrix([[z, 1], [0, 2]])
    assert (a @ a.inverse()).is_identity()
