import itertools

import pytest

from reflex.exactnum import CycloNum, cyc_root_of_unity
from reflex.groups import (UnknownGroup, build_exceptional, build_group, build_monomial_group,
                           count_decoration_tuples, hyperplane_orbits, mono_det, mono_stat_MV,
                           stirling_numbers)
from reflex.linalg import mat_det, mat_rank


def test_monomial_examples():
    G = build_group("G(2,1,2)")
    assert G.order == 8 and G.num_reflections == 4
    assert sorted(o.hyperplanes for o in G.orbits.values()) == [2, 2]
    assert build_group("G(6,2,3)").order == 648
    C = build_group("G(3,1,1)")
    assert (C.order, C.num_reflections, len(C.orbits)) == (3, 2, 1)


def test_mono_statistics_examples(g212):
    _, els = g212
    assert mono_stat_MV(els["e"]) == 0
    assert mono_stat_MV(els["st"]) == 2
    assert mono_stat_MV(els["ut"]) == 2
    assert els["ut"].decor == (1, 1) and els["ut"].perm == (0, 1)
    assert mono_det(els["e"]) == CycloNum.rational(1)
    assert mono_det(els["s"]) == CycloNum.rational(-1)
    assert mono_det(els["ut"]) == CycloNum.rational(1)


def test_fig_statistics_of_g212(g212):
    """M_V per element, as tabulated for the eight elements of G(2,1,2)."""
    _, els = g212
    want = {"e": 0, "u": 1, "s": 1, "st": 2, "t": 1, "ut": 2, "ts": 2, "v": 1}
    assert {k: mono_stat_MV(els[k]) for k in want} == want


def test_exceptional_examples():
    assert build_exceptional("G13").order == 96
    G26 = build_exceptional("G26")
    assert G26.order == 1296 and G26.orbits["t"].reflections == 24
    G28 = build_exceptional("G28")
    assert G28.order == 1152
    assert sorted(o.hyperplanes for o in G28.orbits.values()) == [12, 12]


def test_hyperplane_orbits():
    assert sorted(len(v) for v in hyperplane_orbits(build_group("G(2,1,2)")).values()) == [2, 2]
    assert len(hyperplane_orbits(build_group("G4"))) == 1
    # 3 coordinate hyperplanes and 3 pairs x 6 roots of unity (recorded in the decisions ledger)
    sizes = {k: len(v) for k, v in hyperplane_orbits(build_group("G(6,2,3)")).items()}
    assert sizes == {"s": 3, "t": 18}


def test_stirling():
    assert stirling_numbers(3) == [1, 3, 2]
    assert stirling_numbers(1) == [1]
    # sum Stir_i(4) q^i = (1+q)(1+2q)(1+3q), checked against cycle counts of S_4
    counts = [0] * 4
    for p in itertools.permutations(range(4)):
        seen, c = set(), 0
        for i in range(4):
            if i not in seen:
                c += 1
                j = i
                while j not in seen:
                    seen.add(j)
                    j = p[j]
        counts[4 - c] += 1
    assert stirling_numbers(4) == counts == [1, 6, 11, 6]


def test_count_decoration_tuples_examples():
    assert count_decoration_tuples(6, 3, 2, 1) == (0, 2)
    assert count_decoration_tuples(6, 3, 2, 0) == (1, 0)
    assert count_decoration_tuples(4, 2, 2, 2) == (5, 0)


def test_matrix_realization_agrees():
    G = build_monomial_group(4, 2, 3)
    for g in G.elements():
        M = g.matrix()
        assert mono_stat_MV(g) == mat_rank(M.minus_identity())
        assert mono_det(g) == mat_det(M)


def test_well_generation_and_restriction():
    assert build_group("G(6,2,3)").well_generated is False
    assert build_group("G(6,2,3)").well_restricted == {"s": True, "t": False}
    assert build_group("G13").well_restricted["t"] is False
    assert all(build_group("G26").well_restricted.values())
    assert build_group("G26").n_eps == {"s": 1, "t": 2}


def test_bad_specs():
    for bad in ("G(99", "G3", "G99", "H(1,1,1)"):
        with pytest.raises((UnknownGroup, ValueError)):
            build_group(bad)
    with pytest.raises(ValueError):
        build_monomial_group(6, 4, 2)


def test_exceptional_cache_roundtrip(tmp_path, monkeypatch):
    monkeypatch.setenv("REFLEX_CACHE_DIR", str(tmp_path))
    a = build_exceptional.__wrapped__("G6", use_cache=True)
    assert list(tmp_path.iterdir())
    b = build_exceptional.__wrapped__("G6", use_cache=True)
    c = build_exceptional.__wrapped__("G6", use_cache=False)
    for G in (b, c):
        assert G.order == a.order == 48
        assert {k: (o.hyperplanes, o.reflections) for k, o in G.orbits.items()} == \
               {k: (o.hyperplanes, o.reflections) for k, o in a.orbits.items()}
