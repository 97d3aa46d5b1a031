from itertools import combinations

import networkx as nx
from hypothesis import given, settings

from phylograph.chordal import (
    clique_graph,
    clique_graph_cycle,
    clique_number,
    degeneracy,
    find_diamond,
    find_holes,
    is_chordal,
    is_diamond_free,
    is_perfect_elimination_ordering,
    lex_bfs,
    maximal_cliques,
)
from phylograph.graph import Hole, SimpleGraph

import naive
from strategies import graphs


def as_naive(g):
    return g.n, frozenset(g.edges)


def test_c4_hole():
    cert = is_chordal(SimpleGraph.cycle(4))
    assert not cert and cert.hole == Hole((0, 1, 2, 3))
    assert cert.validate(SimpleGraph.cycle(4))


def test_empty_graph_conventions():
    g = SimpleGraph.empty(0)
    assert is_chordal(g)
    assert clique_number(g) == 0
    assert degeneracy(g)[0] == 0


def test_holes_small():
    assert find_holes(SimpleGraph.complete(4)) == []
    assert find_holes(SimpleGraph.cycle(5)) == [Hole((0, 1, 2, 3, 4))]
    k33 = SimpleGraph.complete_bipartite(3, 3)
    assert len(find_holes(k33)) == 9  # every 4-cycle of K3,3 is induced
    assert len(find_holes(k33, limit=2)) == 2


def test_cliques_small():
    assert maximal_cliques(SimpleGraph.complete(3)) == [frozenset({0, 1, 2})]
    assert maximal_cliques(SimpleGraph.path(3)) == [frozenset({0, 1}), frozenset({1, 2})]


def test_clique_graph_examples():
    kp = clique_graph(SimpleGraph.path(3))
    assert kp.derived.sorted_edges() == [(0, 1)]
    ks = clique_graph(SimpleGraph.star(3))
    assert ks.derived == SimpleGraph.complete(3)
    assert clique_graph_cycle(SimpleGraph.star(3)) is not None
    two = clique_graph(SimpleGraph.from_edges(4, [(0, 1), (2, 3)]))
    assert two.derived == SimpleGraph.empty(2)


def test_diamond():
    assert is_diamond_free(SimpleGraph.complete(4))
    assert is_diamond_free(SimpleGraph.complete(3))
    diamond = SimpleGraph.from_edges(4, [e for e in SimpleGraph.complete(4).edges if e != (2, 3)])
    u, v, a, b = find_diamond(diamond)
    assert {a, b} == {2, 3} and {u, v} == {0, 1}


def test_degeneracy_examples():
    assert degeneracy(SimpleGraph.path(6))[0] == 1
    assert degeneracy(SimpleGraph.complete(5))[0] == 4


@settings(max_examples=200)
@given(graphs(max_n=8))
def test_chordality_certificate(g):
    cert = is_chordal(g)
    assert cert.validate(g)
    assert bool(cert) == naive.is_chordal(as_naive(g)) == nx.is_chordal(nx.Graph(list(g.edges)) if g.m else nx.empty_graph(g.n))


@settings(max_examples=150)
@given(graphs(max_n=8))
def test_find_holes_matches_subset_search(g):
    got = sorted(h.vertex_set for h in find_holes(g))
    want = sorted(naive.hole_sets(as_naive(g)))
    assert sorted(map(sorted, got)) == sorted(map(sorted, want))
    assert all(h.is_valid_in(g) for h in find_holes(g))


@settings(max_examples=150)
@given(graphs(max_n=8))
def test_cliques_match_subset_search(g):
    assert set(maximal_cliques(g)) == naive.maximal_cliques(as_naive(g))
    assert clique_number(g) == naive.omega(as_naive(g))


@given(graphs(max_n=8))
def test_diamond_and_degeneracy_oracles(g):
    ng = as_naive(g)
    assert is_diamond_free(g) == (not naive.has_diamond(ng))
    k, order = degeneracy(g)
    assert sorted(order) == list(range(g.n))
    assert k == naive.degeneracy(ng)


@given(graphs(max_n=8))
def test_lex_bfs_gives_peo_exactly_on_chordal(g):
    order = lex_bfs(g)
    assert sorted(order) == list(range(g.n))
    assert is_perfect_elimination_ordering(g, order[::-1]) == bool(is_chordal(g))


@given(graphs(max_n=7))
def test_clique_graph_definition(g):
    kg = clique_graph(g)
    assert len(set(kg.cliques)) == len(kg.cliques)
    assert set(kg.cliques) == naive.maximal_cliques((g.n, frozenset(g.edges)))
    for a, b in combinations(range(len(kg.cliques)), 2):
        assert kg.derived.has_edge(a, b) == bool(kg.cliques[a] & kg.cliques[b])
    assert (clique_graph_cycle(g) is None) == naive.clique_graph_is_forest((g.n, frozenset(g.edges)))
