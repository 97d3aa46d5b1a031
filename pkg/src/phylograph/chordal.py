"""Chordality, holes, cliques and related structure of simple graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Hole, SimpleGraph, find_cycle, shortest_path


@dataclass(frozen=True)
class ChordalCertificate:
    """Outcome of :func:`is_chordal`.

    Exactly one of ``peo`` (a perfect elimination ordering) and ``hole``
    is set. Truthiness follows the verdict.
    """

    chordal: bool
    peo: tuple[int, ...] | None = None
    hole: Hole | None = None

    def __bool__(self) -> bool:
        return self.chordal

    def validate(self, g: SimpleGraph) -> bool:
        if self.chordal:
            return self.peo is not None and self.hole is None and is_perfect_elimination_ordering(g, self.peo)
        return self.peo is None and self.hole is not None and self.hole.is_valid_in(g)


def lex_bfs(g: SimpleGraph) -> list[int]:
    """Lexicographic BFS visit order (ties broken by smallest id)."""
    labels: dict[int, list[int]] = {v: [] for v in range(g.n)}
    order = []
    for step in range(g.n, 0, -1):
        v = max(labels, key=lambda x: (labels[x], -x))
        order.append(v)
        del labels[v]
        for w in g.adj[v]:
            if w in labels:
                labels[w].append(step)
    return order


def is_perfect_elimination_ordering(g: SimpleGraph, order) -> bool:
    if sorted(order) != list(range(g.n)):
        return False
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not g.is_clique(later):
            return False
    return True


def _hole_through(g: SimpleGraph, v: int, x: int, y: int) -> Hole | None:
    # x, y: non-adjacent neighbours of v; close them through a path avoiding N[v]
    blocked = g.closed_neighbors(v) - {x, y}
    allowed = [u for u in range(g.n) if u not in blocked]
    path = shortest_path(g, x, y, allowed)
    if path is None:
        return None
    return Hole(tuple([v] + path))


def find_any_hole(g: SimpleGraph) -> Hole | None:
    for v in range(g.n):
        nb = sorted(g.adj[v])
        for x, y in combinations(nb, 2):
            if not g.has_edge(x, y):
                h = _hole_through(g, v, x, y)
                if h is not None:
                    return h
    return None


def is_chordal(g: SimpleGraph) -> ChordalCertificate:
    """Decide chordality with a checkable witness either way.

    Lex-BFS yields a candidate elimination ordering (reverse visit
    order). If some vertex's later neighbours fail to sit inside the
    neighbourhood of the earliest of them, the violating pair is closed
    into a hole by a shortest path that avoids the pivot's neighbourhood.
    """
    visit = lex_bfs(g)
    peo = visit[::-1]
    pos = {v: k for k, v in enumerate(peo)}
    for v in peo:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        p = min(later, key=pos.__getitem__)
        for x in sorted(later):
            if x != p and not g.has_edge(p, x):
                h = _hole_through(g, v, p, x) or find_any_hole(g)
                if h is None:  # pragma: no cover - Lex-BFS failure implies a hole
                    raise AssertionError("PEO check failed but no hole exists")
                return ChordalCertificate(False, hole=h)
    return ChordalCertificate(True, peo=tuple(peo))


def find_holes(g: SimpleGraph, limit: int | None = None) -> list[Hole]:
    """Every hole of ``g`` once, in canonical form, sorted.

    Grows chordless paths from each start vertex ``s`` through larger
    vertices only, so ``s`` is the least vertex of any cycle found; the
    orientation is fixed by requiring the second vertex to be smaller
    than the last.
    """
    adj = g.mask_adj()
    found: list[Hole] = []

    def grow(path: list[int], inner: int) -> bool:
        # inner: mask of path vertices other than s and the last one
        s, last = path[0], path[-1]
        for v in sorted(g.adj[last]):
            if v <= s or adj[v] & inner or v in path:
                continue
            if adj[v] >> s & 1:
                if len(path) >= 3 and path[1] < v:
                    found.append(Hole(tuple(path + [v])))
                    if limit is not None and len(found) >= limit:
                        return True
                continue
            if grow(path + [v], inner | (1 << last) if last != s else inner):
                return True
        return False

    for s in range(g.n):
        for a in sorted(g.adj[s]):
            if a > s and grow([s, a], 0):
                return sorted(found)
    return sorted(found)


def maximal_cliques(g: SimpleGraph) -> list[frozenset[int]]:
    """Bron-Kerbosch with pivoting; sorted by the sorted vertex tuple."""
    adj = g.mask_adj()
    out: list[frozenset[int]] = []

    def bits(m: int):
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(frozenset(bits(r)))
            return
        pivot = max(bits(p | x), key=lambda u: bin(adj[u] & p).count("1"))
        for v in list(bits(p & ~adj[pivot])):
            expand(r | (1 << v), p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    return sorted(out, key=lambda c: sorted(c))


def clique_number(g: SimpleGraph) -> int:
    return max((len(c) for c in maximal_cliques(g)), default=0)


@dataclass(frozen=True)
class CliqueGraph:
    """Clique graph of ``base``: vertex ``a`` stands for ``cliques[a]``."""

    base: SimpleGraph
    cliques: tuple[frozenset[int], ...]
    derived: SimpleGraph


def clique_graph(g: SimpleGraph) -> CliqueGraph:
    cliques = tuple(maximal_cliques(g))
    es = [(a, b) for a, b in combinations(range(len(cliques)), 2) if cliques[a] & cliques[b]]
    return CliqueGraph(g, cliques, SimpleGraph.from_edges(len(cliques), es))


def clique_graph_cycle(g: SimpleGraph) -> list[frozenset[int]] | None:
    """A cycle of maximal cliques in the clique graph, if there is one."""
    kg = clique_graph(g)
    cyc = find_cycle(kg.derived)
    return None if cyc is None else [kg.cliques[a] for a in cyc]


def find_diamond(g: SimpleGraph) -> tuple[int, int, int, int] | None:
    """An induced diamond as ``(u, v, a, b)`` with ``ab`` the missing edge."""
    for u, v in g.sorted_edges():
        common = sorted(g.adj[u] & g.adj[v])
        for a, b in combinations(common, 2):
            if not g.has_edge(a, b):
                return (u, v, a, b)
    return None


def is_diamond_free(g: SimpleGraph) -> bool:
    return find_diamond(g) is None


def degeneracy(g: SimpleGraph) -> tuple[int, list[int]]:
    """Degeneracy and the min-degree peeling order (smallest id on ties)."""
    deg = {v: len(g.adj[v]) for v in range(g.n)}
    k = 0
    order = []
    while deg:
        v = min(deg, key=lambda x: (deg[x], x))
        k = max(k, deg[v])
        order.append(v)
        del deg[v]
        for w in g.adj[v]:
            if w in deg:
                deg[w] -= 1
    return k, order


def simplicial_vertices(g: SimpleGraph) -> list[int]:
    return [v for v in range(g.n) if g.is_clique(g.adj[v])]
