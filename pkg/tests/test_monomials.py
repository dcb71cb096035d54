import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coverdeal import (
    HFamilySpec,
    Monomial,
    MonomialIdeal,
    SimpleGraph,
    UnsupportedConfiguration,
    ValidationError,
    build_h_graph,
    closed_form_cover_ideal_h,
    colon_by_monomial,
    cover_ideal_by_intersection,
    cover_ideal_from_covers,
    edge_ideal,
    equal,
    minimal_covers,
)
from coverdeal.monomials import ONE, intersect

from oracles import all_subsets, ideal_contains
from strategies import graphs, h_specs

K2 = SimpleGraph.from_edges(2, [(1, 2)])
K3 = SimpleGraph.complete(3)


def ideal(n, *supports):
    return MonomialIdeal.from_supports(n, supports)


def test_edge_ideal_examples(ex29_graph, ex16_graph):
    assert str(edge_ideal(ex29_graph)) == "(X1*X2, X2*X4, X2*X6, X3*X4, X4*X6, X5*X6)"
    assert str(edge_ideal(K2)) == "(X1*X2)"
    assert len(edge_ideal(ex16_graph)) == 13


def test_cover_ideal_examples(ex16_graph, ex29_graph):
    i16 = cover_ideal_from_covers(minimal_covers(ex16_graph), 11)
    assert set(map(str, i16.gens)) == {
        "X1*X6*X8*X11", "X2*X6*X8*X11", "X2*X6*X7*X11", "X2*X6*X8*X9*X10", "X2*X3*X4*X5*X8*X11",
    }
    assert str(cover_ideal_from_covers(minimal_covers(K2), 2)) == "(X1, X2)"
    i29 = cover_ideal_from_covers(minimal_covers(ex29_graph), 6)
    assert set(map(str, i29.gens)) == {"X2*X4*X6", "X2*X4*X5", "X2*X3*X6", "X1*X4*X6"}


def test_intersection_examples(ex29_graph, ex29):
    assert cover_ideal_by_intersection(K2) == ideal(2, [1], [2])
    assert cover_ideal_by_intersection(K3) == ideal(3, [1, 2], [1, 3], [2, 3])
    assert cover_ideal_by_intersection(ex29_graph) == closed_form_cover_ideal_h(ex29)
    assert cover_ideal_by_intersection(SimpleGraph.empty(3)).is_unit()


def test_triangle_intersection_by_membership():
    # w lies in every (X_i, X_j) exactly when w meets every edge
    got = cover_ideal_by_intersection(K3)
    edges = K3.edges()
    for w in all_subsets(range(1, 4)):
        expected = all(u in w or v in w for u, v in edges)
        assert got.contains(Monomial.of(*w)) == expected


def test_closed_form_examples(ex16, ex29):
    assert set(map(str, closed_form_cover_ideal_h(ex16).gens)) == {
        "X1*X6*X8*X11", "X2*X6*X8*X11", "X2*X6*X7*X11", "X2*X6*X8*X9*X10", "X2*X3*X4*X5*X8*X11",
    }
    assert closed_form_cover_ideal_h(ex29).supports == [[1, 4, 6], [2, 3, 6], [2, 4, 5], [2, 4, 6]]
    single = HFamilySpec(4, (2, 3, 4), {2: [1]})
    assert closed_form_cover_ideal_h(single).supports == [[2, 3], [2, 4], [1, 3, 4]]
    with pytest.raises(UnsupportedConfiguration):
        closed_form_cover_ideal_h(HFamilySpec.from_counts([2, 1, 0, 0]))


def test_colon_examples():
    assert colon_by_monomial(ideal(6, [2, 4, 6]), Monomial.of(2, 4, 5)) == ideal(6, [6])
    i = ideal(4, [1, 2], [3, 4])
    assert colon_by_monomial(i, ONE) == i
    assert colon_by_monomial(ideal(3, [1, 2], [1, 3]), Monomial.of(2, 3)) == ideal(3, [1])


def test_colon_triangle_by_membership():
    # (X1X2, X1X3):(X2X3) against w*u in I for every squarefree w on 3 variables
    i = ideal(3, [1, 2], [1, 3])
    u = frozenset({2, 3})
    got = colon_by_monomial(i, Monomial.of(*u))
    gens = [frozenset(s) for s in i.supports]
    for w in all_subsets(range(1, 4)):
        assert got.contains(Monomial.of(*w)) == ideal_contains(gens, w | u)


@st.composite
def squarefree_ideals(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    subsets = [frozenset(s) for s in all_subsets(range(1, n + 1)) if s]
    gens = draw(st.lists(st.sampled_from(subsets), min_size=1, max_size=6))
    return n, gens


@settings(max_examples=200)
@given(squarefree_ideals(), st.data())
def test_colon_membership_oracle(data_ideal, data):
    n, gens = data_ideal
    u = data.draw(st.sets(st.integers(1, n)))
    i = MonomialIdeal.from_supports(n, gens)
    got = colon_by_monomial(i, Monomial.of(*u))
    masks = got.masks
    assert all(a & b != a for a, b in itertools.permutations(masks, 2))
    for w in all_subsets(range(1, n + 1)):
        assert got.contains(Monomial.of(*w)) == ideal_contains(gens, w | u)


@settings(max_examples=100)
@given(squarefree_ideals(), squarefree_ideals())
def test_intersection_membership_oracle(a, b):
    n = max(a[0], b[0])
    i, j = MonomialIdeal.from_supports(n, a[1]), MonomialIdeal.from_supports(n, b[1])
    both = intersect(i, j)
    for w in all_subsets(range(1, n + 1)):
        assert both.contains(Monomial.of(*w)) == (ideal_contains(a[1], w) and ideal_contains(b[1], w))


def test_equal_and_minimalization():
    assert equal(ideal(2, [1]), ideal(2, [1], [1, 2]))
    assert not equal(ideal(2, [1]), ideal(2, [2]))
    with pytest.raises(ValidationError):
        equal(ideal(2, [1]), ideal(3, [1]))
    with pytest.raises(ValidationError):
        ideal(2, [3])


def test_generator_order_is_degree_then_lex():
    i = ideal(5, [4, 5], [1, 2, 4], [1, 5], [2, 3])
    assert i.supports == [[1, 5], [2, 3], [4, 5], [1, 2, 4]]
    assert MonomialIdeal.from_json(i.to_json()) == i


@settings(max_examples=150)
@given(h_specs(max_n=12))
def test_triple_equality(spec):
    g = build_h_graph(spec)
    closed = closed_form_cover_ideal_h(spec)
    enum = cover_ideal_from_covers(minimal_covers(g), g.n)
    inter = cover_ideal_by_intersection(g)
    assert equal(closed, enum) and equal(enum, inter)
    assert closed.to_json() == enum.to_json() == inter.to_json()
    assert len(closed) == (spec.m + 1 if spec.regime() == "all-stars" else spec.m)
    if spec.regime() == "all-stars":
        assert min(closed.degrees()) >= spec.m
    for mask in closed.masks:
        assert g.covers_all_edges(mask)


@given(graphs(max_n=8))
def test_cover_ideal_routes_agree_on_any_graph(g):
    if not g.edge_count():
        return
    assert cover_ideal_by_intersection(g) == cover_ideal_from_covers(minimal_covers(g), g.n)
    assert set(edge_ideal(g).degrees()) == {2}
