from itertools import combinations

import pytest
from hypothesis import given

from phylograph.digraph import (
    DegreeBounds,
    Digraph,
    Shard,
    acyclic_labeling,
    check_ij,
    directed_cycle,
    enumerate_ij_dags,
    is_acyclic,
    iter_ij_dags,
    projected_count,
    weak_components,
)
from phylograph.extremal import fig1

from strategies import dags


def descending_arc_sets(n, i, j):
    """Brute force: arc subsets with every arc from a larger to a smaller id."""
    pairs = [(u, v) for u in range(n) for v in range(u)]
    out = set()
    for r in range(len(pairs) + 1):
        for arcs in combinations(pairs, r):
            if all(sum(1 for a in arcs if a[1] == v) <= i and sum(1 for a in arcs if a[0] == v) <= j for v in range(n)):
                out.add(frozenset(arcs))
    return out


def test_single_arc_labeling():
    f = acyclic_labeling(Digraph.from_arcs(2, [(0, 1)]))
    assert f.label == (2, 1)


def test_three_cycle():
    d = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    assert acyclic_labeling(d) is None and not is_acyclic(d)
    cyc = directed_cycle(d)
    assert sorted(cyc) == [0, 1, 2]
    assert all((cyc[k], cyc[(k + 1) % 3]) in d.arcs for k in range(3))
    assert not check_ij(d, DegreeBounds(5, 5))


def test_fig1_bounds():
    d = fig1().digraph
    assert check_ij(d, DegreeBounds(3, 2))
    bad = check_ij(d, DegreeBounds(2, 2))
    assert not bad and "indegree 3" in bad.violation
    assert d.indegree(fig1().vid("v4")) == 3
    assert check_ij(Digraph.from_arcs(1), DegreeBounds(1, 1))
    assert acyclic_labeling(d).is_valid_for(d)


def test_degree_bounds_positive():
    with pytest.raises(ValueError):
        DegreeBounds(0, 1)


def test_weak_components():
    assert len(weak_components(Digraph.from_arcs(4, [(0, 1), (3, 2)]))) == 2
    assert len(weak_components(fig1().digraph)) == 1
    comps = weak_components(Digraph.from_arcs(3))
    assert [ids for _, ids in comps] == [[0], [1], [2]]


def test_small_counts():
    assert enumerate_ij_dags(1, DegreeBounds(2, 2), lambda d: None).visited == 1
    assert enumerate_ij_dags(2, DegreeBounds(1, 1), lambda d: None).visited == 2
    assert enumerate_ij_dags(3, DegreeBounds(1, 1), lambda d: None).visited == len(descending_arc_sets(3, 1, 1))


@pytest.mark.parametrize("i,j", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2), (2, 3), (3, 3)])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_is_exactly_the_descending_family(n, i, j):
    seen = [d.arcs for _, d in iter_ij_dags(n, DegreeBounds(i, j))]
    assert len(seen) == len(set(seen))
    assert set(seen) == descending_arc_sets(n, i, j)


@pytest.mark.parametrize("n", [5, 6])
def test_enumeration_order_and_bounds(n):
    b = DegreeBounds(2, 2)
    paths = []
    for path, d in iter_ij_dags(n, b):
        assert check_ij(d, b)
        paths.append(path)
    assert paths == sorted(paths)
    assert len(paths) <= projected_count(n, b)


@pytest.mark.parametrize("shards", [2, 3, 7])
def test_shards_partition(shards):
    b = DegreeBounds(2, 2)
    whole = [d.arcs for _, d in iter_ij_dags(6, b)]
    parts = [d.arcs for s in range(shards) for _, d in iter_ij_dags(6, b, Shard(s, shards))]
    assert sorted(map(sorted, parts)) == sorted(map(sorted, whole))


def test_visitor_abort():
    stats = enumerate_ij_dags(5, DegreeBounds(2, 2), lambda d: d.m >= 3)
    assert stats.aborted and stats.visited >= 1


@given(dags())
def test_labeling_sound(d):
    f = acyclic_labeling(d)
    assert f is not None and f.is_valid_for(d)


@given(dags(max_n=7), dags(max_n=7))
def test_bounds_monotone(d, _):
    for i in range(1, 4):
        for j in range(1, 4):
            if check_ij(d, DegreeBounds(i, j)):
                assert check_ij(d, DegreeBounds(i + 1, j)) and check_ij(d, DegreeBounds(i, j + 1))
