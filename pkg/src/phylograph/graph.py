"""Undirected simple graphs on dense integer vertex ids, and holes."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Immutable simple graph with vertices ``0..n-1``.

    Build one with :meth:`from_edges`; the constructor expects already
    validated adjacency.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    edges: frozenset[tuple[int, int]] = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]] = ()) -> SimpleGraph:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        es = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
            es.add(_edge(u, v))
        return cls(n, tuple(frozenset(s) for s in nbrs), frozenset(es))

    @classmethod
    def empty(cls, n: int) -> SimpleGraph:
        return cls.from_edges(n)

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        return cls.from_edges(n, combinations(range(n), 2))

    @classmethod
    def cycle(cls, n: int) -> SimpleGraph:
        return cls.from_edges(n, [(k, (k + 1) % n) for k in range(n)])

    @classmethod
    def path(cls, n: int) -> SimpleGraph:
        return cls.from_edges(n, [(k, k + 1) for k in range(n - 1)])

    @classmethod
    def star(cls, leaves: int) -> SimpleGraph:
        return cls.from_edges(leaves + 1, [(0, k) for k in range(1, leaves + 1)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> SimpleGraph:
        return cls.from_edges(a + b, [(x, a + y) for x in range(a) for y in range(b)])

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(b in self.adj[a] for a, b in combinations(vs, 2))

    def add_edges(self, edges: Iterable[Sequence[int]]) -> SimpleGraph:
        return SimpleGraph.from_edges(self.n, list(self.edges) + [tuple(e) for e in edges])

    def remove_vertex(self, v: int) -> tuple[SimpleGraph, list[int]]:
        keep = [u for u in range(self.n) if u != v]
        return self.subgraph(keep)

    def subgraph(self, vertices: Iterable[int]) -> tuple[SimpleGraph, list[int]]:
        """Induced subgraph, relabelled densely.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        ids = sorted(set(vertices))
        new = {old: k for k, old in enumerate(ids)}
        es = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return SimpleGraph.from_edges(len(ids), es), ids

    def mask_adj(self) -> list[int]:
        """Adjacency as bitmasks, for the search routines."""
        out = []
        for nb in self.adj:
            m = 0
            for u in nb:
                m |= 1 << u
            out.append(m)
        return out

    def __str__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.sorted_edges()})"


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least rotation over both orientations."""
    k = len(cycle)
    seq = list(cycle)
    best = None
    for order in (seq, seq[::-1]):
        for r in range(k):
            cand = tuple(order[r:] + order[:r])
            if best is None or cand < best:
                best = cand
    return best if best is not None else ()


@dataclass(frozen=True, order=True)
class Hole:
    """An induced cycle of length at least four, stored canonically."""

    cycle: tuple[int, ...]

    def __post_init__(self):
        if len(self.cycle) < 4:
            raise ValueError(f"a hole needs at least 4 vertices, got {self.cycle}")
        if len(set(self.cycle)) != len(self.cycle):
            raise ValueError(f"repeated vertex in {self.cycle}")
        object.__setattr__(self, "cycle", canonical_cycle(self.cycle))

    def __len__(self) -> int:
        return len(self.cycle)

    def __iter__(self):
        return iter(self.cycle)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.cycle)

    def edges(self) -> list[tuple[int, int]]:
        c = self.cycle
        return [_edge(c[k], c[(k + 1) % len(c)]) for k in range(len(c))]

    def is_valid_in(self, g: SimpleGraph) -> bool:
        c = self.cycle
        k = len(c)
        if any(not (0 <= v < g.n) for v in c):
            return False
        for a in range(k):
            for b in range(a + 1, k):
                consecutive = b == a + 1 or (a == 0 and b == k - 1)
                if g.has_edge(c[a], c[b]) != consecutive:
                    return False
        return True


def components(g: SimpleGraph) -> list[list[int]]:
    """Connected components, each sorted, ordered by least vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: SimpleGraph) -> bool:
    return len(components(g)) <= 1


def max_degree(g: SimpleGraph) -> int:
    return max((len(a) for a in g.adj), default=0)


def is_forest(g: SimpleGraph) -> bool:
    return g.m == g.n - len(components(g))


def is_disjoint_union_of_paths(g: SimpleGraph) -> bool:
    return is_forest(g) and max_degree(g) <= 2


def bfs_distances(g: SimpleGraph, source: int, allowed: frozenset[int] | set[int] | None = None) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in sorted(g.adj[x]):
            if y not in dist and (allowed is None or y in allowed):
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def shortest_path(g: SimpleGraph, s: int, t: int, allowed: Iterable[int] | None = None) -> list[int] | None:
    """BFS path from ``s`` to ``t`` inside ``allowed`` (both ends always allowed).

    Neighbors are scanned in increasing id order, so the result is
    deterministic. Returns ``None`` when ``t`` is unreachable.
    """
    ok = None if allowed is None else set(allowed) | {s, t}
    parent = {s: s}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        if x == t:
            break
        for y in sorted(g.adj[x]):
            if y not in parent and (ok is None or y in ok):
                parent[y] = x
                queue.append(y)
    if t not in parent:
        return None
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    return path[::-1]


def find_cycle(g: SimpleGraph) -> list[int] | None:
    """Some cycle of ``g`` as a vertex list, or ``None`` for forests."""
    parent: dict[int, int] = {}
    for root in range(g.n):
        if root in parent:
            continue
        parent[root] = -1
        stack = [root]
        while stack:
            x = stack.pop()
            for y in sorted(g.adj[x]):
                if y == parent[x]:
                    continue
                if y in parent:
                    # y already discovered: walk both back to their meeting point
                    px = [x]
                    while px[-1] != -1:
                        px.append(parent[px[-1]])
                    py = [y]
                    while py[-1] != -1:
                        py.append(parent[py[-1]])
                    common = set(px) & set(py)
                    a = next(v for v in px if v in common)
                    left = px[: px.index(a) + 1]
                    right = py[: py.index(a)]
                    return left + right[::-1]
                parent[y] = x
                stack.append(y)
    return None


def join_with_independent_set(g: SimpleGraph, k: int) -> SimpleGraph:
    """``g`` joined with ``k`` new mutually non-adjacent vertices."""
    if k < 0:
        raise ValueError("k must be non-negative")
    new = range(g.n, g.n + k)
    return SimpleGraph.from_edges(g.n + k, list(g.edges) + [(u, x) for x in new for u in range(g.n)])
