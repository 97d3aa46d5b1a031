import pytest
from hypothesis import given, settings

from phylograph.chordal import clique_graph
from phylograph.digraph import DegreeBounds, check_ij, iter_ij_dags
from phylograph.graph import SimpleGraph, is_forest
from phylograph.harness.graphs import all_graphs, canonical_form, graph_classes
from phylograph.phylogeny import phylogeny_graph
from phylograph.realize import decide_1j, decide_11, decide_i1, validate_obstruction

from strategies import graphs


def two_triangles():
    return SimpleGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def diamond():
    return SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def assert_round_trip(g, verdict, i, j):
    assert verdict.realizable and verdict.obstruction is None
    w = verdict.witness
    assert check_ij(w.digraph, DegreeBounds(i, j))
    assert phylogeny_graph(w.digraph).edges == g.edges and w.digraph.n == g.n


def test_star_examples():
    star = SimpleGraph.star(3)
    v = decide_1j(star, 2)
    assert_round_trip(star, v, 1, 2)
    center = 0
    d = v.witness.digraph
    assert d.indegree(center) <= 1 and d.outdegree(center) <= 2
    v = decide_1j(star, 1)
    assert not v and v.obstruction.reason == "Δ > j+1"
    assert validate_obstruction(star, v.obstruction, j=1)


def test_c4_is_not_a_forest():
    for j in (1, 2, 5):
        v = decide_1j(SimpleGraph.cycle(4), j)
        assert not v and v.obstruction.reason == "not a forest" and v.witness is None
        assert validate_obstruction(SimpleGraph.cycle(4), v.obstruction)


def test_i1_examples():
    assert_round_trip(SimpleGraph.path(3), decide_i1(SimpleGraph.path(3), 1), 1, 1)
    v = decide_i1(diamond(), 3)
    assert not v and v.obstruction.reason == "diamond found"
    assert validate_obstruction(diamond(), v.obstruction)
    g = two_triangles()
    assert_round_trip(g, decide_i1(g, 2), 2, 1)
    assert clique_graph(g).derived.m == 1


def test_i1_obstructions():
    v = decide_i1(SimpleGraph.cycle(5), 2)
    assert v.obstruction.reason == "not chordal"
    v = decide_i1(SimpleGraph.complete(4), 2)
    assert v.obstruction.reason == "ω > i+1" and validate_obstruction(SimpleGraph.complete(4), v.obstruction, i=2)
    v = decide_i1(SimpleGraph.star(3), 3)
    assert v.obstruction.reason == "clique graph has a cycle"
    assert validate_obstruction(SimpleGraph.star(3), v.obstruction)


def test_11_examples():
    two_paths = SimpleGraph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert_round_trip(two_paths, decide_11(two_paths), 1, 1)
    assert not decide_11(SimpleGraph.star(3))
    v = decide_11(SimpleGraph.empty(1))
    assert v and v.witness.digraph.m == 0


def test_bad_parameters():
    with pytest.raises(ValueError):
        decide_1j(SimpleGraph.path(2), 0)
    with pytest.raises(ValueError):
        decide_i1(SimpleGraph.path(2), 0)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_verdicts_self_check(g):
    for j in (1, 2, 3):
        v = decide_1j(g, j)
        if v:
            assert_round_trip(g, v, 1, j)
        else:
            assert validate_obstruction(g, v.obstruction, j=j)
    for i in (1, 2, 3):
        v = decide_i1(g, i)
        if v:
            assert_round_trip(g, v, i, 1)
        else:
            assert validate_obstruction(g, v.obstruction, i=i)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7))
def test_three_way_equivalence_for_paths(g):
    some_1j = any(decide_1j(g, j) for j in range(1, g.n + 2))
    some_i1 = any(decide_i1(g, i) for i in range(1, g.n + 2))
    assert bool(decide_11(g)) == bool(decide_1j(g, 1)) == (some_1j and some_i1)


def phylogeny_classes(n, i, j):
    return {canonical_form(phylogeny_graph(d)) for _, d in iter_ij_dags(n, DegreeBounds(i, j))}


@pytest.mark.parametrize("j", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_1j_completeness(n, j):
    reachable = phylogeny_classes(n, 1, j)
    for g in graph_classes(n):
        assert bool(decide_1j(g, j)) == (canonical_form(g) in reachable)


@pytest.mark.parametrize("j", [1, 2, 3])
def test_1j_completeness_n7_forests(j):
    reachable = phylogeny_classes(7, 1, j)
    assert all(is_forest(phylogeny_graph(d)) for _, d in iter_ij_dags(7, DegreeBounds(1, j)))
    for g in graph_classes(7, forests_only=True):
        assert bool(decide_1j(g, j)) == (canonical_form(g) in reachable)


@pytest.mark.parametrize("i", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_i1_completeness(n, i):
    reachable = phylogeny_classes(n, i, 1)
    for g in graph_classes(n):
        assert bool(decide_i1(g, i)) == (canonical_form(g) in reachable)


def test_labelled_round_trip_n5():
    for g in all_graphs(5):
        for i in (1, 2, 3):
            v = decide_i1(g, i)
            if v:
                assert_round_trip(g, v, i, 1)
