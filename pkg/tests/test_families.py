import networkx as nx
import pytest
from hypothesis import given, strategies as st

from alphaspectra.digraph import DigraphError, EvalPoint, charpoly_oracle, is_strongly_connected
from alphaspectra.families import (
    FamilySpec,
    attach_cycle,
    c_n_g,
    c_n_g_chord,
    coalesce,
    cycle,
    girth,
    inf,
    path_bundle,
    rose,
    theta,
    theta_hat,
)
from oracles import to_nx


def iso(g, h):
    return nx.is_isomorphic(to_nx(g), to_nx(h))


def test_cycle_shape():
    g = cycle(5)
    assert g.n == 5 and g.m == 5 and girth(g) == 5
    with pytest.raises(DigraphError):
        cycle(1)


def test_rose_sizes_and_hub():
    g = rose((4, 3, 2))
    assert g.n == 1 + 3 + 2 + 1 and g.m == 9
    assert g.out_degrees()[0] == 3 and g.in_degrees()[0] == 3
    assert is_strongly_connected(g)


def test_rose_rejects_bad_compositions():
    with pytest.raises(DigraphError):
        rose((2, 3))
    with pytest.raises(DigraphError):
        rose((3, 1))


def test_inf_counts():
    g = inf(3, 4, 5)
    assert g.n == 3 + 4 + 5 - 2 and g.m == 12
    assert is_strongly_connected(g)


@pytest.mark.parametrize("q", [3, 5, 6])
def test_inf_gap_changes_shape_not_polynomial(q):
    p = EvalPoint(1.9, 0.35)
    base = charpoly_oracle(inf(3, q, 4), p)
    for gap in range(2, q):
        assert charpoly_oracle(inf(3, q, 4, gap=gap), p) == pytest.approx(base, rel=1e-10)


def test_path_bundle():
    g = path_bundle((3, 2, 1))
    assert g.n == 2 + 2 + 1 and g.m == 6
    assert g.out_degrees()[0] == 3 and g.in_degrees()[1] == 3
    with pytest.raises(DigraphError):
        path_bundle((2, 1, 1))


def test_theta_shape():
    g = theta((3, 2), (2, 1))
    assert g.n == 2 + 2 + 1 + 1 and g.m == 8
    assert is_strongly_connected(g)


def test_theta_swap_is_isomorphic():
    assert iso(theta((3, 2), (4,)), theta((4,), (3, 2)))


@pytest.mark.parametrize("n", [4, 5, 6, 8])
def test_c_n_g_two_constructions_agree(n):
    for g in range(2, n):
        a, b = c_n_g(n, g), c_n_g_chord(n, g)
        assert a.n == n and a.m == n + 1
        assert iso(a, b)
        assert girth(a) == g


def test_theta_hat_shape():
    for n in (4, 5, 7):
        g = theta_hat(n)
        assert g.n == n and g.m == n + 2
        assert is_strongly_connected(g)
        assert sorted(g.out_degrees()) == [1] * (n - 2) + [2, 2]


def test_girth_acyclic_raises():
    with pytest.raises(DigraphError):
        girth(path_bundle((2,)))


def test_girth_matches_networkx_cycles():
    for g in [rose((5, 3)), inf(2, 4, 6), theta((4, 3), (2, 1)), theta_hat(7)]:
        ref = min(len(c) for c in nx.simple_cycles(to_nx(g)))
        assert girth(g) == ref


def test_attach_and_coalesce():
    g = attach_cycle(cycle(3), 1, 4)
    assert g.n == 6 and g.m == 7
    h = coalesce(cycle(3), 1, cycle(4), 0)
    assert iso(g, h)


compositions = st.lists(st.integers(1, 6), min_size=1, max_size=4).map(lambda c: tuple(sorted(c, reverse=True)))

specs = st.one_of(
    st.integers(2, 9).map(lambda n: FamilySpec("C", (n,))),
    compositions.filter(lambda c: c[-1] >= 2).map(lambda c: FamilySpec("R", (c,))),
    st.tuples(st.integers(2, 6), st.integers(2, 6), st.integers(2, 6)).map(lambda t: FamilySpec("Inf", t)),
    st.tuples(compositions, compositions).filter(lambda p: p[0].count(1) <= 1 and p[1].count(1) <= 1)
    .map(lambda p: FamilySpec("Th", p)),
    st.integers(4, 9).flatmap(lambda n: st.integers(2, n - 1).map(lambda g: FamilySpec("CnG", (n, g)))),
    st.integers(4, 9).map(lambda n: FamilySpec("ThHat", (n,))),
)


@given(specs)
def test_spec_round_trip_and_size(spec):
    text = str(spec)
    back = FamilySpec.parse(text)
    assert back == spec
    assert back.build().m == spec.size()


@pytest.mark.parametrize("text", ["C()", "Q(3)", "Th(2,1)", "Inf(2,3)", "C(3", "R(2,3)"])
def test_bad_spec_text(text):
    with pytest.raises(DigraphError):
        FamilySpec.parse(text).build()
