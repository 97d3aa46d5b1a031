"""The named digraphs: the (3,2) chordality counterexample, the two small
tight clique examples, the K5-minor example, and the (2,j) family whose
phylogeny graph has a clique of size j+3."""

from __future__ import annotations

from dataclasses import dataclass, field

from .chordal import clique_number, find_holes, is_chordal, maximal_cliques
from .digraph import DegreeBounds, Digraph, check_ij
from .graph import Hole
from .minors import K5, has_minor
from .phylogeny import compute_phylogeny

NAMES = ("fig1", "fig2_left", "fig2_right", "fig3", "clique_extremal")


@dataclass(frozen=True)
class NamedConstruction:
    name: str
    digraph: Digraph
    labels: tuple[str, ...]
    bounds: DegreeBounds
    expected: dict[str, object] = field(default_factory=dict)

    def vid(self, label: str) -> int:
        return self.labels.index(label)

    def hole(self, *labels: str) -> Hole:
        return Hole(tuple(self.vid(x) for x in labels))


def _from_labels(name, labels, arcs, bounds, expected=None) -> NamedConstruction:
    idx = {x: k for k, x in enumerate(labels)}
    d = Digraph.from_arcs(len(labels), [(idx[a], idx[b]) for a, b in arcs])
    return NamedConstruction(name, d, tuple(labels), bounds, dict(expected or {}))


def _v(k: int) -> str:
    return f"v{k}"


def fig1() -> NamedConstruction:
    labels = [_v(k) for k in range(1, 8)]
    arcs = [("v2", "v1"), ("v2", "v4"), ("v5", "v3"), ("v5", "v7"), ("v6", "v4"), ("v6", "v7"),
            ("v7", "v3"), ("v7", "v4"), ("v4", "v1"), ("v4", "v3"), ("v3", "v1")]
    c = _from_labels("fig1", labels, arcs, DegreeBounds(3, 2))
    ix = c.vid
    c.expected.update({
        "bounds": (3, 2),
        "U_chordal": True,
        "P_chordal": False,
        "P_holes": [c.hole("v2", "v3", "v5", "v6")],
        "cared": {
            tuple(sorted((ix(a), ix(b)))): ix(w)
            for a, b, w in [("v2", "v3", "v1"), ("v2", "v6", "v4"), ("v2", "v7", "v4"),
                            ("v4", "v5", "v3"), ("v5", "v6", "v7")]
        },
    })
    return c


def fig2_left() -> NamedConstruction:
    c = _from_labels("fig2_left", ["v2", "v3", "v4"], [("v2", "v3"), ("v4", "v3")], DegreeBounds(2, 1))
    c.expected.update({"bounds": (2, 1), "clique_number_P": 3})
    return c


def fig2_right() -> NamedConstruction:
    labels = ["v2", "v3", "v4", "v5", "v6"]
    arcs = [("v2", "v3"), ("v2", "v5"), ("v4", "v3"), ("v4", "v5"), ("v3", "v6"), ("v5", "v6")]
    c = _from_labels("fig2_right", labels, arcs, DegreeBounds(2, 2))
    c.expected.update({
        "bounds": (2, 2),
        "clique_number_P": 4,
        "P_clique": frozenset(c.vid(x) for x in ("v2", "v3", "v4", "v5")),
    })
    return c


def fig3() -> NamedConstruction:
    labels = [_v(k) for k in range(1, 10)]
    arcs = [("v7", "v5"), ("v7", "v4"), ("v6", "v5"), ("v6", "v4"), ("v5", "v3"), ("v4", "v3"),
            ("v8", "v7"), ("v9", "v6"), ("v8", "v1"), ("v9", "v2"), ("v3", "v1"), ("v3", "v2")]
    c = _from_labels("fig3", labels, arcs, DegreeBounds(2, 2))
    c.expected.update({
        "bounds": (2, 2),
        "U_chordal": False,
        "U_hole": c.hole("v8", "v7", "v5", "v3", "v1"),
        "P_has_K5_minor": True,
    })
    return c


def clique_extremal(j: int) -> NamedConstruction:
    """A (2, j) digraph whose phylogeny graph has the clique v1..v_{j+3}.

    Built in stages: stage 1 and 2 add helper sinks joining v1 (resp. v2)
    to most other v's plus two arcs into v1 (resp. v2); stages 3..j-1 do
    the same for v_l; three final arcs close the clique on v_j..v_{j+3}.
    """
    if j < 3:
        raise ValueError("clique_extremal needs j >= 3 (fig2_left / fig2_right cover j <= 2)")
    labels = [_v(k) for k in range(1, j + 4)]
    arcs: list[tuple[str, str]] = []

    def stage(ell: int, targets, extra_tails):
        for i in targets:
            helper = f"a{ell},{i}"
            labels.append(helper)
            arcs.append((_v(ell), helper))
            arcs.append((_v(i), helper))
        for t in extra_tails:
            arcs.append((_v(t), _v(ell)))

    stage(1, range(2, j + 2), (j + 2, j + 3))
    stage(2, [i for i in range(1, j + 3) if i not in (1, 2, j)], (j, j + 3))
    for ell in range(3, j):
        stage(ell, range(ell + 1, j + 2), (j + 2, j + 3))
    arcs += [(_v(j + 3), _v(j + 1)), (_v(j + 2), _v(j)), (_v(j + 1), _v(j))]

    c = _from_labels("clique_extremal", labels, arcs, DegreeBounds(2, j))
    c.expected.update({
        "bounds": (2, j),
        "clique_number_P": j + 3,
        "P_clique": frozenset(range(j + 3)),
    })
    return c


def build(name: str, j: int | None = None) -> NamedConstruction:
    name = name.replace("-", "_")
    if name == "clique":
        name = "clique_extremal"
    if name == "clique_extremal":
        if j is None:
            raise ValueError("clique_extremal needs j")
        return clique_extremal(j)
    builders = {"fig1": fig1, "fig2_left": fig2_left, "fig2_right": fig2_right, "fig3": fig3}
    if name not in builders:
        raise ValueError(f"unknown construction {name!r}; choose from {', '.join(NAMES)}")
    return builders[name]()


def measure(c: NamedConstruction) -> dict[str, object]:
    """Recompute every property named in ``c.expected``."""
    p = compute_phylogeny(c.digraph)
    out: dict[str, object] = {}
    for key in c.expected:
        if key == "bounds":
            i, j = c.expected[key]
            out[key] = (i, j) if check_ij(c.digraph, DegreeBounds(i, j)) else None
        elif key == "U_chordal":
            out[key] = bool(is_chordal(p.underlying))
        elif key == "P_chordal":
            out[key] = bool(is_chordal(p.phylogeny))
        elif key == "P_holes":
            out[key] = find_holes(p.phylogeny)
        elif key == "U_hole":
            h = c.expected[key]
            out[key] = h if h in find_holes(p.underlying) else None
        elif key == "cared":
            out[key] = dict(p.cared)
        elif key == "clique_number_P":
            out[key] = clique_number(p.phylogeny)
        elif key == "P_clique":
            want = c.expected[key]
            out[key] = want if want in maximal_cliques(p.phylogeny) else None
        elif key == "P_has_K5_minor":
            out[key] = has_minor(p.phylogeny, K5) is not None
        else:  # pragma: no cover
            raise KeyError(key)
    return out


def validate(c: NamedConstruction) -> dict[str, tuple[object, object]]:
    """Mismatches between expected and measured properties (empty if none)."""
    got = measure(c)
    return {k: (v, got[k]) for k, v in c.expected.items() if got[k] != v}
