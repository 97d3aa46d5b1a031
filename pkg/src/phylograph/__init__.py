"""Phylogeny (moral) graphs of degree-bounded acyclic digraphs."""

from .chordal import find_holes, is_chordal, maximal_cliques
from .digraph import DegreeBounds, Digraph, check_ij, enumerate_ij_dags, iter_ij_dags
from .graph import Hole, SimpleGraph
from .minors import has_minor, is_planar
from .phylogeny import compute_phylogeny, map_hole, phylogeny_graph
from .realize import decide_1j, decide_11, decide_i1

__all__ = [
    "DegreeBounds",
    "Digraph",
    "Hole",
    "SimpleGraph",
    "check_ij",
    "compute_phylogeny",
    "decide_11",
    "decide_1j",
    "decide_i1",
    "enumerate_ij_dags",
    "find_holes",
    "has_minor",
    "is_chordal",
    "is_planar",
    "iter_ij_dags",
    "map_hole",
    "maximal_cliques",
    "phylogeny_graph",
]
