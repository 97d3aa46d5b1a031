"""Simple digraphs, acyclic labelings, (i, j) bounds and the DAG enumerator."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable, Iterator, Sequence


@dataclass(frozen=True)
class Digraph:
    """Immutable simple digraph on ``0..n-1``; build with :meth:`from_arcs`."""

    n: int
    arcs: frozenset[tuple[int, int]]
    out: tuple[frozenset[int], ...] = field(compare=False, repr=False)
    inn: tuple[frozenset[int], ...] = field(compare=False, repr=False)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]] = ()) -> Digraph:
        out: list[set[int]] = [set() for _ in range(n)]
        inn: list[set[int]] = [set() for _ in range(n)]
        seen = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            out[u].add(v)
            inn[v].add(u)
            seen.add((u, v))
        return cls(n, frozenset(seen), tuple(map(frozenset, out)), tuple(map(frozenset, inn)))

    @property
    def m(self) -> int:
        return len(self.arcs)

    def out_neighbors(self, v: int) -> frozenset[int]:
        return self.out[v]

    def in_neighbors(self, v: int) -> frozenset[int]:
        return self.inn[v]

    def closed_in_neighborhood(self, v: int) -> frozenset[int]:
        return self.inn[v] | {v}

    def indegree(self, v: int) -> int:
        return len(self.inn[v])

    def outdegree(self, v: int) -> int:
        return len(self.out[v])

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def induced(self, vertices: Iterable[int]) -> tuple[Digraph, list[int]]:
        ids = sorted(set(vertices))
        new = {old: k for k, old in enumerate(ids)}
        return Digraph.from_arcs(len(ids), [(new[u], new[v]) for u, v in self.arcs if u in new and v in new]), ids

    def __str__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.sorted_arcs()})"


@dataclass(frozen=True)
class AcyclicLabeling:
    """``label[v]`` in ``1..n``, strictly decreasing along every arc."""

    label: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.label[v]

    def is_valid_for(self, d: Digraph) -> bool:
        return sorted(self.label) == list(range(1, d.n + 1)) and all(self.label[u] > self.label[v] for u, v in d.arcs)


@dataclass(frozen=True)
class DegreeBounds:
    i: int
    j: int

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise ValueError(f"degree bounds must be positive, got ({self.i}, {self.j})")


def acyclic_labeling(d: Digraph) -> AcyclicLabeling | None:
    """Peel sinks, smallest id first, handing out labels 1, 2, ...

    Returns ``None`` if ``d`` has a directed cycle.
    """
    outdeg = [len(o) for o in d.out]
    label = [0] * d.n
    sinks = sorted(v for v in range(d.n) if outdeg[v] == 0)
    heapq.heapify(sinks)
    nxt = 1
    while sinks:
        v = heapq.heappop(sinks)
        label[v] = nxt
        nxt += 1
        for u in d.inn[v]:
            outdeg[u] -= 1
            if outdeg[u] == 0:
                heapq.heappush(sinks, u)
    if nxt != d.n + 1:
        return None
    return AcyclicLabeling(tuple(label))


def directed_cycle(d: Digraph) -> list[int] | None:
    """A directed cycle ``[v0, v1, ..., vk]`` with ``vk -> v0``, or ``None``."""
    color = [0] * d.n
    parent = [-1] * d.n
    for root in range(d.n):
        if color[root]:
            continue
        stack = [(root, iter(sorted(d.out[root])))]
        color[root] = 1
        while stack:
            v, it = stack[-1]
            w = next(it, None)
            if w is None:
                color[v] = 2
                stack.pop()
            elif color[w] == 0:
                color[w] = 1
                parent[w] = v
                stack.append((w, iter(sorted(d.out[w]))))
            elif color[w] == 1:
                cyc = [v]
                while cyc[-1] != w:
                    cyc.append(parent[cyc[-1]])
                return cyc[::-1]
    return None


def is_acyclic(d: Digraph) -> bool:
    return acyclic_labeling(d) is not None


@dataclass(frozen=True)
class BoundsCheck:
    ok: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_ij(d: Digraph, b: DegreeBounds) -> BoundsCheck:
    """Is ``d`` an (i, j) digraph? The first failure is named."""
    for v in range(d.n):
        if len(d.inn[v]) > b.i:
            return BoundsCheck(False, f"vertex {v} has indegree {len(d.inn[v])} > {b.i}")
        if len(d.out[v]) > b.j:
            return BoundsCheck(False, f"vertex {v} has outdegree {len(d.out[v])} > {b.j}")
    cyc = directed_cycle(d)
    if cyc is not None:
        return BoundsCheck(False, "directed cycle " + " -> ".join(map(str, cyc + cyc[:1])))
    return BoundsCheck(True)


def weak_components(d: Digraph) -> list[tuple[Digraph, list[int]]]:
    """Weakly connected pieces, each with its new-id -> old-id list."""
    seen = [False] * d.n
    out = []
    for s in range(d.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            x = stack.pop()
            for y in d.out[x] | d.inn[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        out.append(d.induced(comp))
    return out


# --- enumeration -----------------------------------------------------------


def _out_sets(avail: list[int], j: int) -> Iterator[tuple[int, ...]]:
    # subsets of size <= j in lexicographic order of the sorted tuples
    def rec(cur: tuple[int, ...], start: int):
        yield cur
        if len(cur) == j:
            return
        for k in range(start, len(avail)):
            yield from rec(cur + (avail[k],), k + 1)

    return rec((), 0)


def projected_count(n: int, b: DegreeBounds) -> int:
    """Upper bound on the number of instances visited for ``n`` vertices."""
    total = 1
    for k in range(n):
        total *= sum(comb(k, s) for s in range(min(b.j, k) + 1))
    return total


@dataclass(frozen=True)
class Shard:
    """Select every ``count``-th subtree of the search (``index`` of them)."""

    index: int = 0
    count: int = 1

    def __post_init__(self):
        if not 0 <= self.index < self.count:
            raise ValueError(f"bad shard {self.index}/{self.count}")


def _split_depth(n: int, b: DegreeBounds, shards: int) -> int:
    # shallowest depth with at least `shards` prefixes (degree limits ignored)
    width = 1
    for k in range(n):
        if width >= shards:
            return k
        width *= sum(comb(k, s) for s in range(min(b.j, k) + 1))
    return n


def iter_ij_dags(n: int, b: DegreeBounds, shard: Shard = Shard()) -> Iterator[tuple[tuple[int, ...], Digraph]]:
    """Yield ``(path, digraph)`` over the canonical labelled family.

    Vertex ``k`` is added at step ``k`` and picks its out-neighbours among
    ``0..k-1`` whose indegree is still below ``b.i``, at most ``b.j`` of
    them, subsets in lexicographic order. Every arc therefore points from
    a larger id to a smaller one, so ``label(v) = v + 1`` is an acyclic
    labeling and each (i, j) digraph on ``n`` vertices is isomorphic to at
    least one member. ``path`` records the choice index at every step;
    ordering by path is enumeration order.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    depth = _split_depth(n, b, shard.count)
    indeg = [0] * n
    arcs: list[tuple[int, int]] = []
    path: list[int] = []
    prefix_counter = [0]

    def rec(k: int):
        if k == depth and shard.count > 1:
            mine = prefix_counter[0] % shard.count == shard.index
            prefix_counter[0] += 1
            if not mine:
                return
        if k == n:
            yield tuple(path), Digraph.from_arcs(n, arcs)
            return
        avail = [v for v in range(k) if indeg[v] < b.i]
        for idx, outs in enumerate(_out_sets(avail, b.j)):
            for v in outs:
                indeg[v] += 1
                arcs.append((k, v))
            path.append(idx)
            yield from rec(k + 1)
            path.pop()
            for v in outs:
                indeg[v] -= 1
                arcs.pop()

    return rec(0)


@dataclass
class EnumerationStats:
    visited: int = 0
    aborted: bool = False


def enumerate_ij_dags(
    n: int,
    b: DegreeBounds,
    visitor: Callable[[Digraph], object],
    shard: Shard = Shard(),
) -> EnumerationStats:
    """Stream the canonical family through ``visitor``.

    A truthy return value from the visitor stops the enumeration.
    """
    stats = EnumerationStats()
    for _, d in iter_ij_dags(n, b, shard):
        stats.visited += 1
        if visitor(d):
            stats.aborted = True
            break
    return stats
