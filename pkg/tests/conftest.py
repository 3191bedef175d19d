import pytest

from reflex.groups import MonomialElement, build_group


def mono(perm, decor, m):
    return MonomialElement(tuple(perm), tuple(decor), m)


@pytest.fixture(scope="session")
def g212():
    """G(2,1,2) with s = diag(-1,1), t = the coordinate swap, u = sts, v = tst."""
    G = build_group("G(2,1,2)")
    s, t = mono((0, 1), (1, 0), 2), mono((1, 0), (0, 0), 2)
    els = {"e": MonomialElement.identity(2, 2), "s": s, "t": t}
    els["u"], els["v"] = s * t * s, t * s * t
    els["st"], els["ts"], els["ut"] = s * t, t * s, els["u"] * t
    return G, els
