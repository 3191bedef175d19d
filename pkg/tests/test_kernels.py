from collections import Counter

import numpy as np
import pytest

from reflex import _accel
from reflex.groups import build_monomial_group, cycles
from reflex.weylpoincare import alcove_data

needs_cython = pytest.mark.skipif(_accel.BACKEND != "cython", reason="compiled extension not built")


@needs_cython
@pytest.mark.parametrize("m,b,n", [(2, 1, 2), (4, 2, 3), (6, 3, 3), (3, 1, 4), (2, 2, 5)])
def test_signature_codes_backends_agree(m, b, n):
    a = _accel.signature_codes(m, b, n, backend="cython")
    p = _accel.signature_codes(m, b, n, backend="python")
    assert np.array_equal(np.sort(a), np.sort(p))


@pytest.mark.parametrize("m,b,n", [(2, 1, 2), (4, 2, 3), (3, 3, 3)])
def test_signature_counts_match_elements(m, b, n):
    G = build_monomial_group(m, b, n)
    direct = Counter(tuple(sorted(cycles(g))) for g in G.elements())
    assert _accel.monomial_signature_counts(m, b, n, backend="python") == direct
    assert _accel.monomial_signature_counts(m, b, n) == direct
    assert sum(direct.values()) == G.order


@needs_cython
@pytest.mark.parametrize("typ,n,C", [("C", 2, 16), ("B", 3, 10), ("G", 2, 16), ("A", 2, 12)])
def test_alcove_counts_backends_agree(typ, n, C):
    data = alcove_data(typ, n)
    a = _accel.alcove_counts(*data, C, backend="cython")
    p = _accel.alcove_counts(*data, C, backend="python")
    assert a.tolist() == p.tolist()
