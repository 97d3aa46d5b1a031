"""Edge contraction, minor detection by branch sets, and planarity."""

from __future__ import annotations

from .graph import SimpleGraph, components, join_with_independent_set

DEFAULT_NODE_BUDGET = 10**7


class MinorSearchBudgetExceeded(RuntimeError):
    """The branch-set search visited more nodes than allowed."""


def contract_edge(g: SimpleGraph, u: int, v: int) -> tuple[SimpleGraph, list[int]]:
    """Contract ``uv``; returns the new graph and ``old id -> new id``.

    The merged vertex keeps the smaller of the two ids before the ids
    are re-densified.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    keep, gone = min(u, v), max(u, v)
    idmap = [x if x < gone else x - 1 for x in range(g.n)]
    idmap[gone] = idmap[keep]
    es = set()
    for a, b in g.edges:
        a2, b2 = idmap[a], idmap[b]
        if a2 != b2:
            es.add((min(a2, b2), max(a2, b2)))
    return SimpleGraph.from_edges(g.n - 1, es), idmap


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _twin_predecessor(pattern: SimpleGraph, order: list[int]) -> list[int | None]:
    # Interchangeable pattern vertices (same neighbourhood up to each other)
    # get increasing least-vertex constraints, cutting symmetric branches.
    prev: list[int | None] = []
    for t, q in enumerate(order):
        twin = None
        for s in range(t - 1, -1, -1):
            p = order[s]
            if pattern.adj[p] - {q} == pattern.adj[q] - {p}:
                twin = s
                break
        prev.append(twin)
    return prev


def _pattern_order(pattern: SimpleGraph) -> list[int]:
    order: list[int] = []
    left = set(range(pattern.n))
    while left:
        q = max(left, key=lambda x: (len(pattern.adj[x] & set(order)), len(pattern.adj[x]), -x))
        order.append(q)
        left.remove(q)
    return order


class _Search:
    def __init__(self, g: SimpleGraph, pattern: SimpleGraph, budget: int):
        self.adj = g.mask_adj()
        self.pattern = pattern
        self.order = _pattern_order(pattern)
        self.twin = _twin_predecessor(pattern, self.order)
        pos = {q: t for t, q in enumerate(self.order)}
        self.earlier_nbrs = [[pos[p] for p in pattern.adj[q] if pos[p] < t] for t, q in enumerate(self.order)]
        self.later_nbrs = [[pos[p] for p in pattern.adj[q] if pos[p] > t] for t, q in enumerate(self.order)]
        self.budget = budget
        self.nodes = 0
        self.sets: list[int] = []

    def nbr_mask(self, s: int) -> int:
        out = 0
        for v in _bits(s):
            out |= self.adj[v]
        return out & ~s

    def connected_sets(self, free: int, min_vertex: int, max_size: int):
        """Connected subsets of ``free`` whose least vertex exceeds ``min_vertex``."""
        adj = self.adj
        banned = 0
        for v in _bits(free):
            if v <= min_vertex:
                banned |= 1 << v
                continue
            start = 1 << v
            yield from self._grow(start, adj[v] & free & ~banned & ~start, banned | start, free, max_size)
            banned |= start

    def _grow(self, s: int, cand: int, excl: int, free: int, max_size: int):
        yield s
        if bin(s).count("1") >= max_size:
            return
        c = cand
        x = excl
        while c:
            low = c & -c
            c ^= low
            u = low.bit_length() - 1
            x |= low
            yield from self._grow(s | low, (c | (self.adj[u] & free)) & ~x & ~s, x, free, max_size)

    def run(self, free: int, t: int = 0) -> bool:
        k = len(self.order)
        if t == k:
            return True
        remaining = k - t
        nfree = bin(free).count("1")
        if nfree < remaining:
            return False
        lo = -1
        if self.twin[t] is not None:
            prev = self.sets[self.twin[t]]
            lo = (prev & -prev).bit_length() - 1
        need = [self.sets[s] for s in self.earlier_nbrs[t]]
        for cand in self.connected_sets(free, lo, nfree - remaining + 1):
            self.nodes += 1
            if self.nodes > self.budget:
                raise MinorSearchBudgetExceeded(f"minor search exceeded {self.budget} nodes")
            nb = self.nbr_mask(cand)
            if any(not (nb & b) for b in need):
                continue
            rest = free & ~cand
            self.sets.append(cand)
            if self._feasible(t + 1, rest) and self.run(rest, t + 1):
                return True
            self.sets.pop()
        return False

    def _feasible(self, t: int, free: int) -> bool:
        # every placed set still owing an adjacency must touch the free region
        for s, b in enumerate(self.sets):
            if any(r >= t for r in self.later_nbrs[s]) and not (self.nbr_mask(b) & free):
                return False
        return True


def has_minor(g: SimpleGraph, pattern: SimpleGraph, budget: int = DEFAULT_NODE_BUDGET) -> list[frozenset[int]] | None:
    """Find a minor model of ``pattern`` in ``g``.

    Returns one branch set per pattern vertex (disjoint, each connected in
    ``g``, adjacent wherever the pattern has an edge) or ``None`` when the
    pattern is not a minor. Raises :class:`MinorSearchBudgetExceeded` when
    the search runs past ``budget`` nodes.
    """
    if pattern.n == 0:
        return []
    if pattern.n > g.n or pattern.m > g.m:
        return None
    if len(components(pattern)) == 1:
        regions = [c for c in components(g) if len(c) >= pattern.n]
    else:
        regions = [list(range(g.n))]
    search = _Search(g, pattern, budget)
    for region in regions:
        free = 0
        for v in region:
            free |= 1 << v
        search.sets = []
        if search.run(free):
            model: list[frozenset[int]] = [frozenset()] * pattern.n
            for t, q in enumerate(search.order):
                model[q] = frozenset(_bits(search.sets[t]))
            return model
    return None


def is_minor_model(g: SimpleGraph, pattern: SimpleGraph, model) -> bool:
    """Re-check a branch-set witness returned by :func:`has_minor`."""
    if len(model) != pattern.n:
        return False
    used: set[int] = set()
    for b in model:
        if not b or used & b:
            return False
        used |= b
        sub, _ = g.subgraph(b)
        if len(components(sub)) != 1:
            return False
    for p, q in pattern.edges:
        if not any(g.adj[x] & model[q] for x in model[p]):
            return False
    return True


K5 = SimpleGraph.complete(5)
K33 = SimpleGraph.complete_bipartite(3, 3)
K3_JOIN_I3 = join_with_independent_set(SimpleGraph.complete(3), 3)


def is_planar(g: SimpleGraph, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Planarity via Wagner's theorem: no K5 minor and no K3,3 minor."""
    if g.n <= 4:
        return True
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    return has_minor(g, K5, budget) is None and has_minor(g, K33, budget) is None
