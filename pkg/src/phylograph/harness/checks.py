"""Catalog of statements verified by exhaustive enumeration.

A digraph-domain predicate receives an :class:`Instance` and returns
``None`` when the statement holds on it, or a diagnostic string. For
search-mode checks a returned string marks a witness instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable

from ..chordal import (
    clique_graph,
    clique_number,
    degeneracy,
    find_diamond,
    find_holes,
    is_chordal,
    maximal_cliques,
)
from ..digraph import Digraph, weak_components
from ..graph import SimpleGraph, is_forest, max_degree
from ..minors import K3_JOIN_I3, K5, K33, contract_edge, has_minor, is_planar
from ..phylogeny import (
    PhylogenyResult,
    TheoremViolation,
    caring_violations,
    compute_phylogeny,
    holes_edge_disjoint,
    map_hole_detailed,
)


class Instance:
    """Lazily computed facts about one enumerated digraph."""

    def __init__(self, d: Digraph, i: int, j: int, minor_budget: int):
        self.d = d
        self.i = i
        self.j = j
        self.minor_budget = minor_budget

    @cached_property
    def p(self) -> PhylogenyResult:
        return compute_phylogeny(self.d)

    @cached_property
    def u_chordal(self) -> bool:
        return bool(is_chordal(self.p.underlying))

    @cached_property
    def p_cert(self):
        return is_chordal(self.p.phylogeny)

    @cached_property
    def p_holes(self):
        return find_holes(self.p.phylogeny)

    @cached_property
    def p_cliques(self):
        return maximal_cliques(self.p.phylogeny)

    @cached_property
    def omega(self) -> int:
        return max((len(c) for c in self.p_cliques), default=0)

    @cached_property
    def hole_images(self):
        return [map_hole_detailed(self.d, h, self.p) for h in self.p_holes]

    def minor(self, pattern: SimpleGraph):
        return has_minor(self.p.phylogeny, pattern, self.minor_budget)


class GraphInstance:
    def __init__(self, g: SimpleGraph, minor_budget: int):
        self.g = g
        self.minor_budget = minor_budget

    @cached_property
    def chordal(self) -> bool:
        return bool(is_chordal(self.g))


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    statement: str
    predicate: Callable
    domain: str = "digraph"
    mode: str = "universal"
    applies: Callable[[int, int], bool] = lambda i, j: True

    def applicable(self, i: int, j: int) -> bool:
        return self.domain == "graph" or self.applies(i, j)


def _fail(cond: bool, msg: str) -> str | None:
    return None if cond else msg


# --- (1, j) -----------------------------------------------------------------


def _p_equals_u(x: Instance):
    return _fail(x.p.phylogeny.edges == x.p.underlying.edges, "P(D) != U(D)")


def _1j_forest(x: Instance):
    g = x.p.phylogeny
    if not is_forest(g):
        return "P(D) is not a forest"
    return _fail(max_degree(g) <= x.j + 1, f"max degree {max_degree(g)} > j+1")


def _triangle_free(x: Instance):
    if x.omega > 2:
        return None
    return _1j_forest(x)


# --- (i, 1) -----------------------------------------------------------------


def _least_label_clique(x: Instance):
    f = x.p.labeling
    for c in x.p_cliques:
        if len(c) < 2:
            continue
        low = min(c, key=f.__getitem__)
        if c != x.d.closed_in_neighborhood(low):
            return f"maximal clique {sorted(c)} is not N^-[{low}]"
    return None


def _maximal_cliques_i1(x: Instance):
    for comp, ids in weak_components(x.d):
        if comp.n < 2:
            continue
        got = set(maximal_cliques(compute_phylogeny(comp).phylogeny))
        want = {comp.closed_in_neighborhood(u) for u in range(comp.n) if comp.indegree(u) >= 1}
        if got != want:
            return f"component {ids}: cliques {sorted(map(sorted, got))} != closed in-neighbourhoods {sorted(map(sorted, want))}"
    return None


def _diamond_free_chordal(x: Instance):
    if not x.p_cert:
        return f"P(D) has hole {x.p_cert.hole.cycle}"
    dm = find_diamond(x.p.phylogeny)
    return _fail(dm is None, f"P(D) has diamond {dm}")


def _clique_intersection(x: Instance):
    f = x.p.labeling
    for a, b in combinations(x.p_cliques, 2):
        common = a & b
        if not common:
            continue
        if len(common) != 1:
            return f"cliques {sorted(a)}, {sorted(b)} share {sorted(common)}"
        (v,) = common
        least_a = min(a, key=f.__getitem__) == v
        least_b = min(b, key=f.__getitem__) == v
        if least_a == least_b:
            return f"shared vertex {v} least in {'both' if least_a else 'neither'} of {sorted(a)}, {sorted(b)}"
    return None


def _i1_clique_graph_forest(x: Instance):
    if x.omega > x.i + 1:
        return f"omega {x.omega} > i+1"
    kg = clique_graph(x.p.phylogeny)
    return _fail(is_forest(kg.derived), "clique graph of P(D) has a cycle")


# --- (2, j) -----------------------------------------------------------------


def _2j_chordal(x: Instance):
    if not x.u_chordal or x.p_cert:
        return None
    return f"U chordal but P(D) has hole {x.p_cert.hole.cycle}"


def _2j_chordal_witness(x: Instance):
    if x.u_chordal and not x.p_cert:
        return f"U chordal, P(D) has hole {x.p_cert.hole.cycle}"
    return None


def _caring_off_hole(x: Instance):
    bad = caring_violations(x.p, x.p_holes)
    return None if not bad else f"carer {bad[0][2]} of {bad[0][1]} lies on {bad[0][0].cycle}"


def _hole_images_or_violation(x: Instance):
    try:
        return x.hole_images, None
    except TheoremViolation as exc:
        return None, f"theorem violation: {exc}"


def _ext_set(x: Instance):
    images, err = _hole_images_or_violation(x)
    if err:
        return err
    for im in images:
        w = im.extending
        cared = x.p.cared_edges_on(im.hole)
        if len(w.members) != len(cared) or len(set(w.members)) != len(w.members):
            return f"extending set {w.members} of {im.hole.cycle} not one distinct carer per cared edge"
        if set(w.members) & im.hole.vertex_set:
            return f"extending set {w.members} meets {im.hole.cycle}"
        for m, (a, b) in w.edge_of.items():
            if m not in x.d.out[a] or m not in x.d.out[b]:
                return f"{m} is not a common out-neighbour of {a}, {b}"
    return None


def _map_hole(x: Instance):
    images, err = _hole_images_or_violation(x)
    if err:
        return err
    u = x.p.underlying
    for im in images:
        if not im.image.is_valid_in(u):
            return f"image {im.image.cycle} of {im.hole.cycle} is not a hole of U(D)"
        allowed = im.hole.vertex_set | im.extending.vertex_set
        if not im.image.vertex_set <= allowed:
            return f"image {im.image.cycle} leaves V(H) | W for {im.hole.cycle}"
        if im.extending.members:
            if im.least not in im.extending.vertex_set or im.least not in im.image.vertex_set:
                return f"least-label vertex {im.least} misplaced for {im.hole.cycle}"
        elif im.image != im.hole:
            return f"hole {im.hole.cycle} of U(D) not mapped to itself"
    return None


def _hole_injective(x: Instance):
    if not x.p_holes or not holes_edge_disjoint(x.p_holes):
        return None
    images, err = _hole_images_or_violation(x)
    if err:
        return err
    imgs = [im.image for im in images]
    return _fail(len(set(imgs)) == len(imgs), f"images collide: {[h.cycle for h in imgs]}")


def _degenerate(x: Instance):
    k, _ = degeneracy(x.p.phylogeny)
    return _fail(k <= x.j + 2, f"degeneracy {k} > j+2")


def clique_bound(j: int) -> int:
    return j + 2 if j <= 2 else j + 3


def _clique_bound(x: Instance):
    return _fail(x.omega <= clique_bound(x.j), f"omega {x.omega} > {clique_bound(x.j)}")


def _k_minor_free(x: Instance):
    if not x.u_chordal:
        return None
    k = clique_bound(x.j) + 1
    model = x.minor(SimpleGraph.complete(k))
    return _fail(model is None, f"K_{k} minor {[sorted(b) for b in model or []]}")


def _pattern_free(pattern: SimpleGraph, name: str):
    def pred(x: Instance):
        if not x.u_chordal:
            return None
        model = x.minor(pattern)
        return _fail(model is None, f"{name} minor {[sorted(b) for b in model or []]}")

    return pred


def _planar_22(x: Instance):
    if not x.u_chordal:
        return None
    if not x.p_cert:
        return f"P(D) has hole {x.p_cert.hole.cycle}"
    return _fail(is_planar(x.p.phylogeny, x.minor_budget), "P(D) is not planar")


# --- graph level ------------------------------------------------------------


def _contraction_chordal(x: GraphInstance):
    if not x.chordal:
        return None
    for u, v in x.g.sorted_edges():
        h, _ = contract_edge(x.g, u, v)
        if not is_chordal(h):
            return f"contracting {u}{v} creates a hole"
    return None


def _chordal_minor_free(x: GraphInstance):
    if not x.chordal:
        return None
    w = clique_number(x.g)
    model = has_minor(x.g, SimpleGraph.complete(w + 1), x.minor_budget)
    return _fail(model is None, f"K_{w + 1} minor {[sorted(b) for b in model or []]}")


def _i_is_1(i, j):
    return i == 1


def _j_is_1(i, j):
    return j == 1


def _i_le_2(i, j):
    return i <= 2


def _small_22(i, j):
    return i <= 2 and j <= 2


CATALOG: tuple[TheoremCheck, ...] = (
    TheoremCheck("prop_1j_p_equals_u", "indegree <= 1 means no competition edges, so P(D) = U(D)", _p_equals_u, applies=_i_is_1),
    TheoremCheck("thm_1j_forest", "(1,j) phylogeny graphs are forests with max degree <= j+1", _1j_forest, applies=_i_is_1),
    TheoremCheck("cor_triangle_free", "a triangle-free (i,j) phylogeny graph is a forest with max degree <= j+1", _triangle_free),
    TheoremCheck("lem_i1_least_label_clique", "(i,1): each maximal clique is the closed in-neighbourhood of its least-label vertex", _least_label_clique, applies=_j_is_1),
    TheoremCheck("lem_maximal_cliques_i1", "(i,1), weakly connected, nontrivial: maximal cliques are exactly N^-[u] with indegree >= 1", _maximal_cliques_i1, applies=_j_is_1),
    TheoremCheck("lem_diamond_free_chordal_i1", "(i,1) phylogeny graphs are diamond-free and chordal", _diamond_free_chordal, applies=_j_is_1),
    TheoremCheck("lem_clique_intersection_i1", "(i,1): intersecting maximal cliques share one vertex, least-label in exactly one of them", _clique_intersection, applies=_j_is_1),
    TheoremCheck("thm_i1_clique_graph_forest", "(i,1): clique number <= i+1 and the clique graph is a forest", _i1_clique_graph_forest, applies=_j_is_1),
    TheoremCheck("thm_2j_chordal", "i <= 2 or j = 1: chordal U(D) forces chordal P(D)", _2j_chordal, applies=lambda i, j: i <= 2 or j == 1),
    TheoremCheck("thm_2j_chordal_witness", "i >= 3 and j >= 2: some digraph has chordal U(D) but non-chordal P(D)", _2j_chordal_witness, mode="search", applies=lambda i, j: i >= 3 and j >= 2),
    TheoremCheck("prop_caring_off_hole", "(2,j): no vertex of a hole of P(D) cares for an edge of that hole", _caring_off_hole, applies=_i_le_2),
    TheoremCheck("ext_set_invariants", "(2,j): carers of a hole's cared edges are distinct and off the hole", _ext_set, applies=_i_le_2),
    TheoremCheck("lem_map_hole_valid", "(2,j): the least-label vertex of V(H) | W is a carer and lies on a hole of U(D) inside V(H) | W", _map_hole, applies=_i_le_2),
    TheoremCheck("thm_hole_injective", "(2,j): on edge-disjoint hole families of P(D) the hole map is injective", _hole_injective, applies=_i_le_2),
    TheoremCheck("lem_degenerate", "(2,j) phylogeny graphs are (j+2)-degenerate", _degenerate, applies=_i_le_2),
    TheoremCheck("thm_clique_bound", "(2,j): clique number <= j+2 for j <= 2, <= j+3 otherwise", _clique_bound, applies=_i_le_2),
    TheoremCheck("thm_k_minor_free", "(2,j), chordal U(D): P(D) has no K_{j+3} minor (j <= 2) or K_{j+4} minor (j >= 3)", _k_minor_free, applies=_i_le_2),
    TheoremCheck("cor_k5_minor_free", "(2,2), chordal U(D): P(D) has no K5 minor", _pattern_free(K5, "K5"), applies=_small_22),
    TheoremCheck("lem_k3i3_minor_free", "(2,2), chordal U(D): P(D) has no K3 join I3 minor", _pattern_free(K3_JOIN_I3, "K3 v I3"), applies=_small_22),
    TheoremCheck("thm_k33_minor_free", "(2,2), chordal U(D): P(D) has no K3,3 minor", _pattern_free(K33, "K3,3"), applies=_small_22),
    TheoremCheck("thm_planar_22", "(2,2), chordal U(D): P(D) is chordal and planar", _planar_22, applies=_small_22),
    TheoremCheck("lem_contraction_chordal", "chordal graphs stay chordal under any edge contraction", _contraction_chordal, domain="graph"),
    TheoremCheck("lem_chordal_minor_free", "a chordal graph has no K_{omega+1} minor", _chordal_minor_free, domain="graph"),
)

_BY_ID = {c.id: c for c in CATALOG}


def check_catalog() -> list[TheoremCheck]:
    return list(CATALOG)


def get_check(check_id: str) -> TheoremCheck:
    try:
        return _BY_ID[check_id]
    except KeyError:
        raise KeyError(f"unknown check {check_id!r}") from None
