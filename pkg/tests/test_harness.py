import pytest

from phylograph.harness.checks import CATALOG, Instance, check_catalog, get_check
from phylograph.harness.graphs import chordal_classes, graph_classes, isomorphic
from phylograph.harness.runner import BudgetExceeded, HarnessConfig, run_check, run_checks
from phylograph.io import parse
from phylograph.phylogeny import compute_phylogeny
from phylograph.chordal import is_chordal


def test_catalog_shape():
    cat = check_catalog()
    assert len(cat) >= 16
    assert len({c.id for c in cat}) == len(cat)
    assert all(c.statement for c in cat)
    for cid in ("thm_2j_chordal", "lem_degenerate", "thm_hole_injective", "thm_planar_22", "lem_maximal_cliques_i1",
                "cor_triangle_free", "lem_k3i3_minor_free", "lem_chordal_minor_free", "lem_contraction_chordal"):
        assert get_check(cid).id == cid
    with pytest.raises(KeyError):
        get_check("missing")


def test_defaults_load():
    cfg = HarnessConfig.load()
    assert cfg.budget == 5 * 10**8 and cfg.minor_node_budget == 10**7


def test_chordal_class_counts():
    assert [len(chordal_classes(n)) for n in range(1, 7)] == [1, 2, 4, 10, 27, 94]
    assert [len(graph_classes(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]


def test_deterministic_across_shards():
    checks = [get_check("thm_2j_chordal"), get_check("lem_degenerate"), get_check("thm_clique_bound")]
    one = run_checks(checks, 2, 2, 6)
    three = run_checks(checks, 2, 2, 6, shards=3)
    for a, b in zip(one, three):
        assert (a.instances, a.violation_count) == (b.instances, b.violation_count)


@pytest.fixture(scope="module")
def witness_report():
    return run_check(get_check("thm_2j_chordal_witness"), 3, 2, 7, shards=2)


def test_search_minimal_witness_reproducible(witness_report):
    r = witness_report
    assert r.passed and r.witness.n == 7
    assert r.witness == min(r.violations, key=lambda v: (v.n, v.arcs, v.key))
    d = parse(r.witness.payload).value
    p = compute_phylogeny(d)
    assert is_chordal(p.underlying) and not is_chordal(p.phylogeny)


def test_witness_payloads_revalidate(witness_report):
    chk = get_check("thm_2j_chordal_witness")
    for v in witness_report.violations:
        d = parse(v.payload).value
        assert chk.predicate(Instance(d, 3, 2, 10**7)) is not None


def test_budget_error():
    with pytest.raises(BudgetExceeded):
        run_check(get_check("lem_degenerate"), 2, 2, 9, cfg=HarnessConfig(budget=10**6))


def test_not_applicable():
    with pytest.raises(ValueError):
        run_check(get_check("thm_2j_chordal"), 3, 2, 4)


def test_isomorphic():
    from phylograph.graph import SimpleGraph
    assert isomorphic(SimpleGraph.path(4), SimpleGraph.from_edges(4, [(2, 0), (0, 3), (3, 1)]))
    assert not isomorphic(SimpleGraph.path(4), SimpleGraph.star(3))


def test_graph_domain_small():
    cfg = HarnessConfig(graph_exhaustive_max_n=5, graph_samples=50)
    reps = run_checks([c for c in CATALOG if c.domain == "graph"], 1, 1, 6, cfg=cfg)
    assert all(r.passed and r.instances > 0 for r in reps)
