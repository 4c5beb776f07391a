import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jordan_kit import constructions as C
from jordan_kit.analysis import min_abelian_index
from jordan_kit.errors import CapExceededError, SpecError
from jordan_kit.group import are_isomorphic, quotient_group


@pytest.mark.parametrize(
    "build,order,abelian",
    [
        (lambda: C.cyclic(1), 1, True),
        (lambda: C.cyclic(9), 9, True),
        (lambda: C.dihedral(2), 2, True),
        (lambda: C.dihedral(10), 10, False),
        (lambda: C.symmetric(1), 1, True),
        (lambda: C.alternating(5), 60, False),
        (lambda: C.quaternion(16), 16, False),
        (lambda: C.abelian((2, 6)), 12, True),
        (lambda: C.binary_icosahedral(), 120, False),
    ],
)
def test_family_orders(build, order, abelian):
    G = build()
    assert G.order == order and G.is_abelian == abelian


@pytest.mark.parametrize(
    "bad",
    [lambda: C.cyclic(0), lambda: C.dihedral(7), lambda: C.symmetric(0), lambda: C.quaternion(12), lambda: C.abelian((0,))],
)
def test_bad_family_params(bad):
    with pytest.raises(ValueError):
        bad()


def test_dihedral_and_quaternion_are_different():
    assert C.dihedral(8).center().order == C.quaternion(8).center().order == 2
    assert (C.dihedral(8).element_orders == 2).sum() == 5
    assert (C.quaternion(8).element_orders == 2).sum() == 1


def test_zarhin_params_validation():
    assert C.ZarhinParams((2, 4)).n == 8 and C.ZarhinParams((2, 4)).m == 4
    for bad in [(), (1,), (4, 2), (2, 3)]:
        with pytest.raises(SpecError):
            C.ZarhinParams(bad)


@pytest.mark.parametrize("factors", [(2,), (3,), (4,), (2, 2), (5,), (6,)])
def test_zarhin_structure(factors):
    p = C.ZarhinParams(factors)
    G = C.zarhin_group(p)
    n = p.n
    assert G.order == n**3
    mu = C.zarhin_roots(G, p)
    assert G.center() == mu and mu.order == n
    Q, _ = quotient_group(G, mu)
    assert Q.is_abelian and are_isomorphic(Q, C.abelian(factors + factors))
    assert min_abelian_index(G) >= n


def test_zarhin_product_law():
    p = C.ZarhinParams((2, 4))
    G = C.zarhin_group(p)
    n, m = p.n, p.m
    x = C.zarhin_index(p, 1, (1, 3), (0, 2))
    y = C.zarhin_index(p, 5, (1, 1), (1, 3))
    pair = (1 * 1 * (m // 2) + 3 * 3 * (m // 4)) % m  # <a_y, g_x> with a_y = (1, 3), g_x = (1, 3)
    want = C.zarhin_index(p, (1 + 5 + (n // m) * pair) % n, (0, 0), (1, 1))
    assert G.mul(x, y) == want


def test_zarhin_matches_brute():
    import oracles as O

    B = O.zarhin_brute((2, 2))
    assert len(B.elements) == 64
    assert C.zarhin_group((2, 2)).center().order == len(B.center())


def test_specs():
    spec = C.GroupSpec("family", "symmetric", {"n": 4})
    assert C.from_spec(spec).order == 24 and spec.summary() == "symmetric(4)"
    dp = C.GroupSpec("family", "direct_product", {"left": spec, "right": C.GroupSpec("family", "cyclic", {"n": 2})})
    assert C.from_spec(dp).order == 48 and dp.summary() == "(symmetric(4))x(cyclic(2))"
    perm = C.GroupSpec("permutation", degree=4, generators=(((0, 1, 2, 3),), ((0, 1),)))
    assert C.from_spec(perm).order == 24
    mat = C.GroupSpec("matrix", dim=2, p=3, generators=(((1, 1), (0, 1)), ((0, 2), (1, 0))))
    assert C.from_spec(mat).order == 24
    assert C.standard_family("zarhin", factors=(2,)).order == 8
    with pytest.raises(SpecError):
        C.from_spec(C.GroupSpec("family", "nope", {}))
    with pytest.raises(SpecError):
        C.from_spec(C.GroupSpec("family", "cyclic", {"k": 3}))
    with pytest.raises(SpecError):
        C.from_spec(C.GroupSpec("mystery"))


def test_construction_cap(monkeypatch):
    monkeypatch.setenv("JORDAN_KIT_CAP", "100")
    with pytest.raises(CapExceededError):
        C.zarhin_group((5,))
    with pytest.raises(CapExceededError):
        C.cyclic(101)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 6), min_size=1, max_size=3))
def test_abelian_order(factors):
    G = C.abelian(factors)
    assert G.order == math.prod(factors) and G.is_abelian
    assert G.exponent == math.lcm(*factors)
