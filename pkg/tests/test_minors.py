import pytest
import networkx as nx
from hypothesis import given, settings

from phylograph.chordal import is_chordal
from phylograph.graph import SimpleGraph, join_with_independent_set
from phylograph.minors import (
    K5,
    K33,
    K3_JOIN_I3,
    MinorSearchBudgetExceeded,
    contract_edge,
    has_minor,
    is_minor_model,
    is_planar,
)

import naive
from strategies import graphs


def test_contract_examples():
    g, _ = contract_edge(SimpleGraph.complete(3), 0, 1)
    assert g == SimpleGraph.complete(2)
    g, _ = contract_edge(SimpleGraph.cycle(4), 0, 1)
    assert g.n == 3 and g.m == 3
    g, _ = contract_edge(SimpleGraph.cycle(5), 2, 3)
    assert not is_chordal(g) and g.n == 4
    with pytest.raises(ValueError):
        contract_edge(SimpleGraph.cycle(5), 0, 2)


def test_minor_examples():
    assert has_minor(SimpleGraph.complete(5), K5) is not None
    tree = SimpleGraph.from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert has_minor(tree, SimpleGraph.complete(3)) is None
    assert K3_JOIN_I3 == join_with_independent_set(SimpleGraph.complete(3), 3)


def test_planarity_examples():
    assert is_planar(SimpleGraph.complete(4))
    assert not is_planar(K33)
    k5e = SimpleGraph.from_edges(5, [e for e in K5.edges if e != (0, 1)])
    assert is_planar(k5e)
    assert is_planar(SimpleGraph.empty(0))


def test_petersen_has_k5_minor_but_no_k5_subgraph():
    outer = [(k, (k + 1) % 5) for k in range(5)]
    inner = [(5 + k, 5 + (k + 2) % 5) for k in range(5)]
    spokes = [(k, k + 5) for k in range(5)]
    pet = SimpleGraph.from_edges(10, outer + inner + spokes)
    model = has_minor(pet, K5)
    assert model is not None and is_minor_model(pet, K5, model)
    assert not is_planar(pet)


def test_budget_is_reported():
    g = SimpleGraph.complete_bipartite(4, 4)
    with pytest.raises(MinorSearchBudgetExceeded):
        has_minor(g, SimpleGraph.complete(5), budget=5)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_minor_matches_naive(g):
    ng = (g.n, frozenset(g.edges))
    for k in (3, 4):
        pat = SimpleGraph.complete(k)
        model = has_minor(g, pat)
        assert (model is not None) == naive.is_minor(ng, naive.complete(k))
        if model is not None:
            assert is_minor_model(g, pat, model)
    c4 = SimpleGraph.cycle(4)
    assert (has_minor(g, c4) is not None) == naive.is_minor(ng, (4, frozenset(c4.edges)))


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=5, max_n=9))
def test_planarity_matches_networkx(g):
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges)
    assert is_planar(g) == nx.check_planarity(ref)[0]
    if g.n >= 3 and g.m > 3 * g.n - 6:
        assert not is_planar(g)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_minor_monotone(g):
    pat = SimpleGraph.complete(4)
    base = has_minor(g, pat) is not None
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if missing:
        assert not base or has_minor(g.add_edges(missing[:1]), pat) is not None
    for u, v in g.sorted_edges()[:3]:
        h, _ = contract_edge(g, u, v)
        if has_minor(h, pat) is not None:
            assert base
