import os

import pytest
from hypothesis import given

from phylograph.digraph import Digraph
from phylograph.io import FormatError, format_digraph, format_graph, parse, to_dot, write_all_atomic

from strategies import dags, graphs


@given(graphs())
def test_graph_round_trip(g):
    p = parse(format_graph(g))
    assert p.kind == "graph" and p.value == g
    assert format_graph(p.value) == format_graph(g)


@given(dags())
def test_dag_round_trip(d):
    names = {v: f"x{v}" for v in range(0, d.n, 2)}
    p = parse(format_digraph(d, names, ["a comment"]))
    assert p.kind == "dag" and p.value == d and p.names == names


@pytest.mark.parametrize("text,line", [
    ("e 0 1\n", 1),
    ("p graph 2 1\ne 0 2\n", 2),
    ("p graph 2 1\n", 1),
    ("c hi\np graf 2 0\n", 2),
    ("p graph 3 1\na 0 1\n", 2),
    ("p dag 2 1\na 0 x\n", 2),
    ("p graph 2 2\ne 0 1\ne 1 0\n", 3),
    ("p dag 2 1\na 1 1\n", 2),
    ("", 1),
])
def test_malformed(text, line):
    with pytest.raises(FormatError) as exc:
        parse(text)
    assert exc.value.line == line


def test_expected_kind():
    with pytest.raises(FormatError):
        parse("p dag 1 0\n", "graph")


def test_dot():
    d = Digraph.from_arcs(2, [(1, 0)])
    out = to_dot(d, {0: "v1"})
    assert out.startswith('digraph "G" {') and "1 -> 0;" in out and 'label="v1"' in out


def test_atomic_write_leaves_nothing_on_failure(tmp_path):
    good = tmp_path / "a.txt"
    bad = tmp_path / "missing" / "b.txt"
    with pytest.raises(OSError):
        write_all_atomic({good: "x", bad: "y"})
    assert os.listdir(tmp_path) == []
    write_all_atomic({good: "x"})
    assert good.read_text() == "x"
