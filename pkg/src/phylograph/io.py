"""Plain-text graph and dag files, DOT export and atomic writes.

Both formats share one framing::

    c free comment
    c name 1 v2
    p graph 3 2        (or: p dag 3 2)
    e 0 1              (or: a 0 1, meaning the arc 0 -> 1)

Ids are 0-based. ``c name <id> <label>`` keeps a display label for a vertex.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from .digraph import Digraph
from .graph import SimpleGraph


class FormatError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Parsed:
    kind: str  # "graph" or "dag"
    value: SimpleGraph | Digraph
    names: dict[int, str] = field(default_factory=dict)


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def parse(text: str, expect: str | None = None) -> Parsed:
    """Parse either format; ``expect`` pins the header kind."""
    kind = None
    n = m = 0
    pairs: list[tuple[int, int]] = []
    names: dict[int, str] = {}
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last = lineno
        line = raw.strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "c":
            if len(tok) >= 4 and tok[1] == "name":
                (vid,) = _ints(tok[2:3], lineno)
                names[vid] = " ".join(tok[3:])
            continue
        if tok[0] == "p":
            if kind is not None:
                raise FormatError(lineno, "duplicate header")
            if len(tok) != 4 or tok[1] not in ("graph", "dag"):
                raise FormatError(lineno, "header must be 'p graph <n> <m>' or 'p dag <n> <m>'")
            if expect is not None and tok[1] != expect:
                raise FormatError(lineno, f"expected a {expect} file, found {tok[1]}")
            kind = tok[1]
            n, m = _ints(tok[2:], lineno)
            if n < 0 or m < 0:
                raise FormatError(lineno, "negative size")
            continue
        if kind is None:
            raise FormatError(lineno, "data before header")
        want = "e" if kind == "graph" else "a"
        if tok[0] != want or len(tok) != 3:
            raise FormatError(lineno, f"expected '{want} <u> <v>'")
        u, v = _ints(tok[1:], lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(lineno, f"id out of range 0..{n - 1}")
        if u == v:
            raise FormatError(lineno, "self-loop")
        pairs.append((u, v))
    if kind is None:
        raise FormatError(last or 1, "missing header")
    if len(pairs) != m:
        raise FormatError(last, f"header promises {m} lines, found {len(pairs)}")
    for vid in names:
        if not 0 <= vid < n:
            raise FormatError(last, f"name for unknown vertex {vid}")
    if kind == "graph":
        g = SimpleGraph.from_edges(n, pairs)
        if g.m != m:
            raise FormatError(last, "repeated edge")
        return Parsed(kind, g, names)
    d = Digraph.from_arcs(n, pairs)
    if d.m != m:
        raise FormatError(last, "repeated arc")
    return Parsed(kind, d, names)


def parse_graph(text: str) -> Parsed:
    return parse(text, "graph")


def parse_dag(text: str) -> Parsed:
    return parse(text, "dag")


def _name_lines(names: dict[int, str] | None) -> list[str]:
    return [f"c name {v} {names[v]}" for v in sorted(names or {})]


def format_graph(g: SimpleGraph, names: dict[int, str] | None = None, comments: list[str] = ()) -> str:
    lines = [f"c {c}" for c in comments] + _name_lines(names) + [f"p graph {g.n} {g.m}"]
    lines += [f"e {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def format_digraph(d: Digraph, names: dict[int, str] | None = None, comments: list[str] = ()) -> str:
    lines = [f"c {c}" for c in comments] + _name_lines(names) + [f"p dag {d.n} {d.m}"]
    lines += [f"a {u} {v}" for u, v in d.sorted_arcs()]
    return "\n".join(lines) + "\n"


def _dot_id(v: int, names: dict[int, str] | None) -> str:
    label = (names or {}).get(v)
    return f'{v} [label="{label}"];' if label else f"{v};"


def to_dot(x: SimpleGraph | Digraph, names: dict[int, str] | None = None, title: str = "G") -> str:
    directed = isinstance(x, Digraph)
    head, op = ("digraph", "->") if directed else ("graph", "--")
    lines = [f'{head} "{title}" {{']
    lines += [f"  {_dot_id(v, names)}" for v in range(x.n)]
    pairs = x.sorted_arcs() if directed else x.sorted_edges()
    lines += [f"  {u} {op} {v};" for u, v in pairs]
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_file(path: str | Path, expect: str | None = None) -> Parsed:
    return parse(Path(path).read_text(), expect)


def _stage(path: Path, text: str) -> str:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        # mkstemp creates 0600; give the usual umask-derived mode instead
        mask = os.umask(0)
        os.umask(mask)
        os.chmod(tmp, 0o666 & ~mask)
    except BaseException:
        os.unlink(tmp)
        raise
    return tmp


def write_atomic(path: str | Path, text: str) -> None:
    """Write via a temp file in the same directory, then rename."""
    write_all_atomic({path: text})


def write_all_atomic(files: dict[str | Path, str]) -> None:
    """Stage every file first; rename only once all temp files are written."""
    staged = []
    try:
        for path, text in files.items():
            path = Path(path)
            staged.append((_stage(path, text), path))
    except BaseException:
        for tmp, _ in staged:
            os.unlink(tmp)
        raise
    for tmp, path in staged:
        os.replace(tmp, path)
