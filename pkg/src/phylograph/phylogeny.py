"""Underlying, competition and phylogeny (moral) graphs, cared edges, and
the map sending holes of the phylogeny graph to holes of the underlying
graph for digraphs with indegree at most two."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .chordal import find_holes
from .digraph import AcyclicLabeling, Digraph, acyclic_labeling, directed_cycle
from .graph import Hole, SimpleGraph, shortest_path

Edge = tuple[int, int]


class TheoremViolation(AssertionError):
    """An invariant that a proven statement guarantees did not hold."""


class NotAcyclicError(ValueError):
    pass


def underlying_graph(d: Digraph) -> SimpleGraph:
    return SimpleGraph.from_edges(d.n, d.arcs)


def competition_graph(d: Digraph) -> SimpleGraph:
    es = set()
    for w in range(d.n):
        for x, y in combinations(sorted(d.inn[w]), 2):
            es.add((x, y))
    return SimpleGraph.from_edges(d.n, es)


def phylogeny_graph(d: Digraph) -> SimpleGraph:
    """Moralise: forget directions and marry every pair of co-parents."""
    es = set(d.arcs)
    for w in range(d.n):
        es.update(combinations(sorted(d.inn[w]), 2))
    return SimpleGraph.from_edges(d.n, es)


@dataclass(frozen=True)
class PhylogenyResult:
    digraph: Digraph
    labeling: AcyclicLabeling
    underlying: SimpleGraph
    competition: SimpleGraph
    phylogeny: SimpleGraph
    cared: dict[Edge, int]

    def caring_vertices(self, e: Edge) -> list[int]:
        """All common out-neighbours of the ends of ``e``, least label first."""
        u, v = e
        common = self.digraph.out[u] & self.digraph.out[v]
        return sorted(common, key=self.labeling.__getitem__)

    def cared_edges_on(self, h: Hole) -> list[Edge]:
        return [e for e in h.edges() if e in self.cared]


def _require_acyclic(d: Digraph) -> AcyclicLabeling:
    f = acyclic_labeling(d)
    if f is None:
        raise NotAcyclicError(f"digraph has a directed cycle {directed_cycle(d)}")
    return f


def compute_phylogeny(d: Digraph) -> PhylogenyResult:
    """All three graphs plus the cared-edge map.

    A cared edge is in the competition graph but not the underlying graph.
    When two vertices share more than one out-neighbour the one with the
    smaller acyclic label is recorded as caring.
    """
    f = _require_acyclic(d)
    u = underlying_graph(d)
    c = competition_graph(d)
    p = SimpleGraph.from_edges(d.n, list(u.edges) + list(c.edges))
    cared = {}
    for e in c.sorted_edges():
        if e not in u.edges:
            common = d.out[e[0]] & d.out[e[1]]
            cared[e] = min(common, key=f.__getitem__)
    return PhylogenyResult(d, f, u, c, p, cared)


def caring_violations(p: PhylogenyResult, holes: list[Hole] | None = None) -> list[tuple[Hole, Edge, int]]:
    """Triples (hole, cared edge on it, caring vertex on the same hole)."""
    if holes is None:
        holes = find_holes(p.phylogeny)
    out = []
    for h in holes:
        on = h.vertex_set
        for e in p.cared_edges_on(h):
            for w in p.caring_vertices(e):
                if w in on:
                    out.append((h, e, w))
    return out


def caring_check(d: Digraph, p: PhylogenyResult | None = None) -> bool:
    """No vertex of a hole of P(D) cares for an edge of that hole."""
    if p is None:
        p = compute_phylogeny(d)
    return not caring_violations(p)


@dataclass(frozen=True)
class ExtendingSet:
    hole: Hole
    members: tuple[int, ...]
    edge_of: dict[int, Edge]

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.members)


def _max_indegree(d: Digraph) -> int:
    return max((len(s) for s in d.inn), default=0)


def extending_set(d: Digraph, p: PhylogenyResult, h: Hole) -> ExtendingSet:
    """One caring vertex per cared edge of ``h``, in hole-edge order."""
    if not h.is_valid_in(p.phylogeny):
        raise ValueError(f"{h} is not a hole of the phylogeny graph")
    if _max_indegree(d) > 2:
        raise ValueError("extending sets need indegree at most 2")
    members = []
    edge_of = {}
    for e in p.cared_edges_on(h):
        w = p.cared[e]
        members.append(w)
        edge_of[w] = e
    if len(set(members)) != len(members):
        raise TheoremViolation(f"caring vertices repeat on {h}: {members}")
    if set(members) & h.vertex_set:
        raise TheoremViolation(f"a caring vertex lies on {h}: {members}")
    return ExtendingSet(h, tuple(members), edge_of)


def cycle_from_hole(d: Digraph, h: Hole, w: ExtendingSet) -> list[int]:
    """``h`` with each cared edge replaced by the 2-path through its carer."""
    c = h.cycle
    carer = {e: x for x, e in w.edge_of.items()}
    out = []
    for k in range(len(c)):
        a, b = c[k], c[(k + 1) % len(c)]
        out.append(a)
        e = (a, b) if a < b else (b, a)
        if e in carer:
            out.append(carer[e])
    return out


def subgraph_from_hole(d: Digraph, h: Hole, w: ExtendingSet) -> tuple[SimpleGraph, list[int]]:
    """U(D) induced on the hole plus its extending set (densely relabelled)."""
    return underlying_graph(d).subgraph(h.vertex_set | w.vertex_set)


@dataclass(frozen=True)
class HoleImage:
    hole: Hole
    extending: ExtendingSet
    least: int | None
    image: Hole


def map_hole_detailed(d: Digraph, h: Hole, p: PhylogenyResult | None = None) -> HoleImage:
    if _max_indegree(d) > 2:
        raise ValueError("hole mapping is only defined for indegree at most 2")
    if p is None:
        p = compute_phylogeny(d)
    w = extending_set(d, p, h)
    if not w.members:
        return HoleImage(h, w, None, h)
    f = p.labeling
    least = min(h.vertex_set | w.vertex_set, key=f.__getitem__)
    if least not in w.edge_of:
        raise TheoremViolation(f"least-label vertex {least} of {h} is not a carer")
    u1, ul = w.edge_of[least]
    cyc = cycle_from_hole(d, h, w)
    u = p.underlying
    allowed = (set(cyc) - u.closed_neighbors(least)) | {u1, ul}
    path = shortest_path(u, u1, ul, allowed)
    if path is None:
        raise TheoremViolation(f"no {u1}-{ul} path closes a hole through {least}")
    image = Hole(tuple([least] + path))
    if not image.is_valid_in(u):
        raise TheoremViolation(f"{image} is not a hole of U(D)")
    return HoleImage(h, w, least, image)


def map_hole(d: Digraph, h: Hole, p: PhylogenyResult | None = None) -> Hole:
    """A hole of U(D) inside ``V(h) | W`` through the least-label carer.

    Holes that are already holes of U(D) map to themselves.
    """
    return map_hole_detailed(d, h, p).image


def holes_edge_disjoint(holes: list[Hole]) -> bool:
    seen: set[Edge] = set()
    for h in holes:
        es = set(h.edges())
        if es & seen:
            return False
        seen |= es
    return True
