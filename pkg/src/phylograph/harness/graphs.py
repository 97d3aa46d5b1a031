"""Graph sources for the graph-level checks, plus brute-force canonical forms."""

from __future__ import annotations

import random
from itertools import combinations, permutations, product
from typing import Iterator

from ..chordal import maximal_cliques
from ..graph import SimpleGraph


def all_graphs(n: int) -> Iterator[SimpleGraph]:
    """Every labelled graph on ``n`` vertices (edge-subset order)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph.from_edges(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


def labelled_forests(n: int) -> Iterator[SimpleGraph]:
    """Every labelled forest on ``n`` vertices (no edge subset with a cycle)."""
    pairs = list(combinations(range(n), 2))

    def find(parent, x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(k: int, parent: list[int], chosen: list[tuple[int, int]]):
        if k == len(pairs):
            yield SimpleGraph.from_edges(n, chosen)
            return
        yield from rec(k + 1, parent, chosen)
        a, b = pairs[k]
        ra, rb = find(parent, a), find(parent, b)
        if ra != rb:
            parent = parent.copy()
            parent[ra] = rb
            chosen.append((a, b))
            yield from rec(k + 1, parent, chosen)
            chosen.pop()

    return rec(0, list(range(n)), [])


def random_graphs(n: int, count: int, seed: int) -> Iterator[SimpleGraph]:
    rng = random.Random(seed * 1000 + n)
    pairs = list(combinations(range(n), 2))
    for _ in range(count):
        p = rng.random()
        yield SimpleGraph.from_edges(n, [e for e in pairs if rng.random() < p])


def canonical_form(g: SimpleGraph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Least relabelled edge list over degree-respecting permutations.

    Brute force, meant for graphs of at most eight or so vertices.
    """
    key = {v: (g.degree(v), tuple(sorted(g.degree(u) for u in g.adj[v]))) for v in range(g.n)}
    classes: dict[tuple, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(key[v], []).append(v)
    groups = [classes[k] for k in sorted(classes)]
    best = None
    for perms in product(*(permutations(grp) for grp in groups)):
        order = [v for grp in perms for v in grp]
        pos = {v: k for k, v in enumerate(order)}
        es = tuple(sorted((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in g.edges))
        if best is None or es < best:
            best = es
    return g.n, best if best is not None else ()


def _all_cliques(g: SimpleGraph) -> list[frozenset[int]]:
    out = {frozenset()}
    for c in maximal_cliques(g):
        members = sorted(c)
        for r in range(1, len(members) + 1):
            out.update(frozenset(s) for s in combinations(members, r))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def chordal_classes(n: int) -> list[SimpleGraph]:
    """One representative per isomorphism class of chordal graphs on ``n`` vertices.

    Every chordal graph has a simplicial vertex, so each class on ``n``
    vertices arises from a class on ``n - 1`` vertices by adding a vertex
    whose neighbourhood is a clique.
    """
    level = [SimpleGraph.empty(0)]
    for k in range(n):
        seen: dict = {}
        for g in level:
            for c in _all_cliques(g):
                h = SimpleGraph.from_edges(k + 1, list(g.edges) + [(x, k) for x in c])
                seen.setdefault(canonical_form(h), h)
        level = [seen[key] for key in sorted(seen)]
    return level


def graph_classes(n: int, forests_only: bool = False) -> list[SimpleGraph]:
    """One representative per isomorphism class of graphs on ``n`` vertices.

    Grown one vertex at a time: any neighbourhood for the new vertex, or
    (for forests) at most one neighbour.
    """
    level = [SimpleGraph.empty(0)]
    for k in range(n):
        seen: dict = {}
        for g in level:
            if forests_only:
                nbhds = [()] + [(x,) for x in range(k)]
            else:
                nbhds = [c for r in range(k + 1) for c in combinations(range(k), r)]
            for nb in nbhds:
                h = SimpleGraph.from_edges(k + 1, list(g.edges) + [(x, k) for x in nb])
                seen.setdefault(canonical_form(h), h)
        level = [seen[key] for key in sorted(seen)]
    return level


def isomorphic(a: SimpleGraph, b: SimpleGraph) -> bool:
    return a.n == b.n and a.m == b.m and canonical_form(a) == canonical_form(b)
