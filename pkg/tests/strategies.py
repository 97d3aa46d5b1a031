"""Hypothesis strategies shared by the property tests."""

from itertools import combinations

from hypothesis import strategies as st

from phylograph.digraph import Digraph
from phylograph.graph import SimpleGraph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def dags(draw, min_n=1, max_n=8, i=None, j=None):
    """Random DAG, arcs from higher to lower id, then ids shuffled.

    With ``i``/``j`` given, arcs breaking the degree bounds are skipped.
    """
    n = draw(st.integers(min_n, max_n))
    perm = draw(st.permutations(range(n)))
    indeg = [0] * n
    outdeg = [0] * n
    arcs = []
    for u in range(n):
        for v in range(u):
            if not draw(st.booleans()):
                continue
            if i is not None and indeg[v] >= i:
                continue
            if j is not None and outdeg[u] >= j:
                continue
            indeg[v] += 1
            outdeg[u] += 1
            arcs.append((perm[u], perm[v]))
    return Digraph.from_arcs(n, arcs)
