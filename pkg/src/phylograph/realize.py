"""Decide whether a graph is a (1,j), (i,1) or (1,1) phylogeny graph and
build a witness digraph on the same vertex ids when it is."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .chordal import clique_graph_cycle, find_diamond, is_chordal, maximal_cliques
from .digraph import DegreeBounds, Digraph, check_ij
from .graph import Hole, SimpleGraph, components, find_cycle
from .phylogeny import TheoremViolation, phylogeny_graph


@dataclass(frozen=True)
class Obstruction:
    reason: str
    certificate: tuple


@dataclass(frozen=True)
class RealizationWitness:
    digraph: Digraph
    bounds: DegreeBounds
    claimed_class: str

    def validate(self, g: SimpleGraph) -> bool:
        return bool(check_ij(self.digraph, self.bounds)) and phylogeny_graph(self.digraph).edges == g.edges


@dataclass(frozen=True)
class RealizabilityVerdict:
    realizable: bool
    witness: RealizationWitness | None = None
    obstruction: Obstruction | None = None

    def __bool__(self) -> bool:
        return self.realizable


def _checked(g: SimpleGraph, witness: RealizationWitness) -> RealizabilityVerdict:
    if not witness.validate(g):
        raise TheoremViolation(f"constructed {witness.claimed_class} witness does not reproduce {g}")
    return RealizabilityVerdict(True, witness=witness)


def _no(reason: str, certificate) -> RealizabilityVerdict:
    return RealizabilityVerdict(False, obstruction=Obstruction(reason, tuple(certificate)))


def _orient_forest(g: SimpleGraph) -> Digraph:
    arcs = []
    for comp in components(g):
        leaves = [v for v in comp if g.degree(v) == 1]
        root = leaves[0] if leaves else comp[0]
        depth = {root: 0}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(g.adj[x]):
                if y not in depth:
                    depth[y] = depth[x] + 1
                    arcs.append((x, y))
                    queue.append(y)
    return Digraph.from_arcs(g.n, arcs)


def decide_1j(g: SimpleGraph, j: int, claimed_class: str = "1j") -> RealizabilityVerdict:
    """Forest with maximum degree at most ``j + 1``?

    Each tree is rooted at its least pendant vertex and every edge points
    away from the root, so indegrees are at most one and outdegrees are
    degree minus one.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    cyc = find_cycle(g)
    if cyc is not None:
        return _no("not a forest", cyc)
    for v in range(g.n):
        if g.degree(v) > j + 1:
            return _no("Δ > j+1", [v, *sorted(g.adj[v])])
    return _checked(g, RealizationWitness(_orient_forest(g), DegreeBounds(1, j), claimed_class))


def decide_11(g: SimpleGraph) -> RealizabilityVerdict:
    """Disjoint union of paths, realized like the (1,1) case of :func:`decide_1j`."""
    return decide_1j(g, 1, claimed_class="11")


def _cliques_of(g: SimpleGraph, vs: frozenset[int]) -> list[frozenset[int]]:
    sub, ids = g.subgraph(vs)
    return [frozenset(ids[x] for x in c) for c in maximal_cliques(sub)]


def _realize_component(g: SimpleGraph, vs: frozenset[int], i: int) -> tuple[set[tuple[int, int]], dict[int, int]]:
    """Arcs and an acyclic labeling realizing ``g[vs]`` (connected) as (i, 1)."""
    if g.is_clique(vs):
        sink = min(vs)
        others = sorted(vs - {sink})
        f = {sink: 1, **{x: k + 2 for k, x in enumerate(others)}}
        return {(x, sink) for x in others}, f

    cliques = _cliques_of(g, vs)
    best = None
    for a, x in enumerate(cliques):
        nbrs = [y for b, y in enumerate(cliques) if b != a and x & y]
        if len(nbrs) != 1:
            continue
        shared = x & nbrs[0]
        if len(shared) != 1:
            raise TheoremViolation(f"adjacent maximal cliques {sorted(x)} and {sorted(nbrs[0])} share {len(shared)} vertices")
        (u,) = shared
        v = min(x - shared)
        if best is None or v < best[0]:
            best = (v, u, x, nbrs[0])
    if best is None:
        raise TheoremViolation(f"clique tree of {sorted(vs)} has no leaf")
    v, u, x, y = best

    arcs, f = _realize_component(g, vs - {v}, i)
    rest = x - {v}

    def closed_in(z: int) -> frozenset[int]:
        return frozenset([z] + [a for a, b in arcs if b == z])

    if min(y, key=f.__getitem__) == u:
        outs = [b for a, b in arcs if a == u]
        if not outs:
            if rest != {u}:
                raise TheoremViolation(f"expected {sorted(rest)} == {{{u}}}")
            arcs.add((u, v))
            f[v] = min(f.values()) - 1
        else:
            w = outs[0]
            if closed_in(w) != rest:
                raise TheoremViolation(f"closed in-neighbourhood of {w} is not {sorted(rest)}")
            arcs.add((v, w))
            f[v] = max(f.values()) + 1
    else:
        ins = [a for a, b in arcs if b == u]
        want = frozenset([u]) if not ins else closed_in(u)
        if want != rest:
            raise TheoremViolation(f"closed in-neighbourhood of {u} is not {sorted(rest)}")
        arcs.add((v, u))
        f[v] = max(f.values()) + 1
    return arcs, f


def decide_i1(g: SimpleGraph, i: int) -> RealizabilityVerdict:
    """Diamond-free, chordal, clique number at most ``i + 1`` and a forest
    as clique graph?

    The witness peels a private vertex of a leaf clique of the clique tree,
    realizes the rest, and re-attaches the vertex with a single arc chosen
    from where the shared vertex sits in the smaller witness.
    """
    if i < 1:
        raise ValueError("i must be >= 1")
    cert = is_chordal(g)
    if not cert:
        return _no("not chordal", cert.hole.cycle)
    diamond = find_diamond(g)
    if diamond is not None:
        return _no("diamond found", diamond)
    for c in maximal_cliques(g):
        if len(c) > i + 1:
            return _no("ω > i+1", sorted(c))
    cyc = clique_graph_cycle(g)
    if cyc is not None:
        return _no("clique graph has a cycle", [tuple(sorted(c)) for c in cyc])
    arcs: set[tuple[int, int]] = set()
    for comp in components(g):
        arcs |= _realize_component(g, frozenset(comp), i)[0]
    return _checked(g, RealizationWitness(Digraph.from_arcs(g.n, arcs), DegreeBounds(i, 1), "i1"))


def validate_obstruction(g: SimpleGraph, ob: Obstruction, i: int | None = None, j: int | None = None) -> bool:
    """Re-check a certificate against ``g``."""
    c = ob.certificate
    if ob.reason == "not a forest":
        k = len(c)
        return k >= 3 and len(set(c)) == k and all(g.has_edge(c[t], c[(t + 1) % k]) for t in range(k))
    if ob.reason == "Δ > j+1":
        v, *nb = c
        return j is not None and set(nb) == set(g.adj[v]) and len(nb) > j + 1
    if ob.reason == "not chordal":
        return Hole(tuple(c)).is_valid_in(g)
    if ob.reason == "diamond found":
        u, v, a, b = c
        es = [(u, v), (u, a), (u, b), (v, a), (v, b)]
        return all(g.has_edge(*e) for e in es) and not g.has_edge(a, b)
    if ob.reason == "ω > i+1":
        return i is not None and len(c) > i + 1 and g.is_clique(c)
    if ob.reason == "clique graph has a cycle":
        cl = [frozenset(x) for x in c]
        maxi = set(maximal_cliques(g))
        k = len(cl)
        return k >= 3 and len(set(cl)) == k and all(x in maxi for x in cl) and all(cl[t] & cl[(t + 1) % k] for t in range(k))
    return False
