"""Compare catalog predicates with the naive verdicts, instance by instance."""

from phylograph.digraph import Digraph
from phylograph.graph import SimpleGraph
from phylograph.harness.checks import GraphInstance, Instance, check_catalog

import naive

BOUNDS = [(1, 1), (1, 2), (1, 3), (2, 1), (3, 1), (2, 2), (2, 3), (3, 2)]


def harness_verdicts(d: Digraph, i: int, j: int) -> dict[str, bool]:
    x = Instance(d, i, j, 10**7)
    out = {}
    for c in check_catalog():
        if c.domain != "digraph" or not c.applicable(i, j):
            continue
        diag = c.predicate(x)
        out[c.id] = diag is not None if c.mode == "search" else diag is None
    return out


def harness_graph_verdicts(g: SimpleGraph) -> dict[str, bool]:
    x = GraphInstance(g, 10**7)
    return {c.id: c.predicate(x) is None for c in check_catalog() if c.domain == "graph"}


def digraph_mismatches(family, i, j):
    """(arcs, check id, harness, naive) for every disagreement."""
    bad = []
    count = 0
    for nd in family:
        count += 1
        d = Digraph.from_arcs(nd[0], nd[1])
        got = harness_verdicts(d, i, j)
        want = naive.verdicts(nd, i, j)
        if set(got) != set(want):
            bad.append((sorted(nd[1]), "check set", sorted(got), sorted(want)))
            continue
        bad += [(sorted(nd[1]), k, got[k], want[k]) for k in got if got[k] != want[k]]
    return count, bad


def graph_mismatches(n):
    bad = []
    for ng in naive.all_graphs(n):
        g = SimpleGraph.from_edges(ng[0], ng[1])
        got = harness_graph_verdicts(g)
        want = naive.graph_verdicts(ng)
        bad += [(sorted(ng[1]), k, got[k], want[k]) for k in got if got[k] != want[k]]
    return bad
