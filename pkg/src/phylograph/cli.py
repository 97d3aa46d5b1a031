"""Command-line entry point.

Exit codes: 0 success (or positive verdict), 1 negative verdict or failed
verification, 2 usage error, 3 malformed input file, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import extremal
from .chordal import clique_graph_cycle, find_diamond, find_holes, is_chordal
from .digraph import DegreeBounds, check_ij
from .graph import Hole, SimpleGraph, find_cycle, is_disjoint_union_of_paths
from .harness.checks import check_catalog, get_check
from .harness.runner import BudgetExceeded, HarnessConfig, run_checks
from .io import FormatError, format_digraph, format_graph, read_file, to_dot, write_all_atomic
from .minors import K5, K33, MinorSearchBudgetExceeded, has_minor
from .phylogeny import NotAcyclicError, TheoremViolation, compute_phylogeny, map_hole_detailed
from .realize import decide_1j, decide_11, decide_i1

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_FORMAT, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _namer(names: dict[int, str]):
    return lambda v: names.get(v, str(v))


def _fmt_cycle(vs, name) -> str:
    return "(" + ",".join(name(v) for v in vs) + ")"


def _edge_str(e, names) -> str:
    if all(v in names for v in e):
        return names[e[0]] + names[e[1]]
    return f"{e[0]}-{e[1]}"


def _emit(text: str, out: str | None) -> None:
    if out:
        write_all_atomic({out: text})
    else:
        sys.stdout.write(text)


# --- compute ------------------------------------------------------------------


def cmd_compute(args) -> int:
    parsed = read_file(args.dag, "dag")
    d, names = parsed.value, parsed.names
    try:
        p = compute_phylogeny(d)
    except NotAcyclicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    prefix = args.out_prefix or str(Path(args.dag).with_suffix(""))
    files = {}
    for tag, g in (("underlying", p.underlying), ("competition", p.competition), ("phylogeny", p.phylogeny)):
        files[f"{prefix}.{tag}.graph"] = format_graph(g, names)
        if args.dot:
            files[f"{prefix}.{tag}.dot"] = to_dot(g, names, tag)
    rows = ["edge\tcaring_vertex"]
    rows += [f"{_edge_str(e, names)}\t{names.get(w, w)}" for e, w in sorted(p.cared.items())]
    files[f"{prefix}.cared.tsv"] = "\n".join(rows) + "\n"
    if args.dot:
        files[f"{prefix}.dag.dot"] = to_dot(d, names, "D")
    write_all_atomic(files)
    for path in files:
        print(path)
    return EXIT_OK


# --- check ----------------------------------------------------------------------


def cmd_check(args) -> int:
    parsed = read_file(args.graph, "graph")
    g: SimpleGraph = parsed.value
    name = _namer(parsed.names)
    cls = args.cls
    if cls == "chordal":
        cert = is_chordal(g)
        if cert:
            print("chordal: yes")
            print("peo " + " ".join(name(v) for v in cert.peo))
            return EXIT_OK
        print("chordal: no")
        print("hole " + _fmt_cycle(cert.hole.cycle, name))
        return EXIT_NO
    if cls == "diamond-free":
        dm = find_diamond(g)
        if dm is None:
            print("diamond-free: yes")
            return EXIT_OK
        u, v, a, b = dm
        print("diamond-free: no")
        print(f"diamond {name(u)} {name(v)} {name(a)} {name(b)} (missing edge {name(a)}{name(b)})")
        return EXIT_NO
    if cls in ("forest", "paths"):
        cyc = find_cycle(g)
        if cyc is not None:
            print(f"{cls}: no")
            print("cycle " + _fmt_cycle(cyc, name))
            return EXIT_NO
        if cls == "paths" and not is_disjoint_union_of_paths(g):
            v = next(v for v in range(g.n) if g.degree(v) > 2)
            print("paths: no")
            print(f"degree {name(v)} {g.degree(v)}")
            return EXIT_NO
        if args.j is not None:
            for v in range(g.n):
                if g.degree(v) > args.j + 1:
                    print(f"{cls}: no")
                    print(f"degree {name(v)} {g.degree(v)} > j+1 = {args.j + 1}")
                    return EXIT_NO
        print(f"{cls}: yes")
        return EXIT_OK
    if cls == "clique-graph-forest":
        cyc = clique_graph_cycle(g)
        if cyc is None:
            print("clique-graph-forest: yes")
            return EXIT_OK
        print("clique-graph-forest: no")
        print("clique cycle " + " ".join("{" + ",".join(name(v) for v in sorted(c)) + "}" for c in cyc))
        return EXIT_NO
    if cls == "planar":
        if g.n >= 3 and g.m > 3 * g.n - 6:
            print("planar: no")
            print(f"edge count {g.m} > 3n-6 = {3 * g.n - 6}")
            return EXIT_NO
        for label, pat in (("K5", K5), ("K3,3", K33)):
            model = has_minor(g, pat)
            if model is not None:
                print("planar: no")
                print(f"{label} minor " + " ".join("{" + ",".join(name(v) for v in sorted(b)) + "}" for b in model))
                return EXIT_NO
        print("planar: yes")
        return EXIT_OK
    raise UsageError(f"unknown class {cls}")  # pragma: no cover


# --- realize --------------------------------------------------------------------


def cmd_realize(args) -> int:
    parsed = read_file(args.graph, "graph")
    g = parsed.value
    if args.cls == "1j":
        if args.j is None:
            raise UsageError("--class 1j needs --j")
        verdict = decide_1j(g, args.j)
    elif args.cls == "i1":
        if args.i is None:
            raise UsageError("--class i1 needs --i")
        verdict = decide_i1(g, args.i)
    else:
        verdict = decide_11(g)
    if verdict:
        w = verdict.witness
        comments = [f"witness class {w.claimed_class} bounds ({w.bounds.i},{w.bounds.j})"]
        _emit(format_digraph(w.digraph, parsed.names, comments), args.out)
        return EXIT_OK
    ob = verdict.obstruction
    print(f"obstruction: {ob.reason}")
    print("certificate " + json.dumps(ob.certificate))
    return EXIT_NO


# --- holes ----------------------------------------------------------------------


def cmd_holes(args) -> int:
    parsed = read_file(args.graph, "graph")
    name = _namer(parsed.names)
    holes = find_holes(parsed.value)
    print(f"holes {len(holes)}")
    for h in holes:
        print(_fmt_cycle(h.cycle, name))
    return EXIT_OK


def cmd_map_holes(args) -> int:
    parsed = read_file(args.dag, "dag")
    d, names = parsed.value, parsed.names
    name = _namer(names)
    bc = check_ij(d, DegreeBounds(args.i, args.j))
    if not bc:
        print(f"error: not a ({args.i},{args.j}) digraph: {bc.violation}", file=sys.stderr)
        return EXIT_NO
    if args.i > 2:
        raise UsageError("map-holes needs --i <= 2")
    p = compute_phylogeny(d)
    holes = find_holes(p.phylogeny)
    print(f"holes {len(holes)}")
    try:
        for h in holes:
            im = map_hole_detailed(d, h, p)
            print("hole " + _fmt_cycle(h.cycle, name))
            cared = p.cared_edges_on(h)
            print("  cared " + (" ".join(_edge_str(e, names) for e in cared) or "-"))
            print("  W " + ("{" + ",".join(name(w) for w in sorted(im.extending.members)) + "}"))
            print("  image " + _fmt_cycle(im.image.cycle, name))
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_NO
    return EXIT_OK


# --- extremal -------------------------------------------------------------------


def _fmt_value(v, names: dict[int, str]) -> str:
    name = _namer(names)
    if isinstance(v, Hole):
        return _fmt_cycle(v.cycle, name)
    if isinstance(v, list):
        return "[" + " ".join(_fmt_value(x, names) for x in v) + "]"
    if isinstance(v, frozenset):
        return "{" + ",".join(name(x) for x in sorted(v)) + "}"
    if isinstance(v, dict):
        return " ".join(f"{_edge_str(e, names)}->{name(w)}" for e, w in sorted(v.items()))
    if isinstance(v, tuple):
        return "(" + ",".join(str(x) for x in v) + ")"
    return str(v).lower() if isinstance(v, bool) else str(v)


def cmd_extremal(args) -> int:
    try:
        c = extremal.build(args.name, args.j)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    names = dict(enumerate(c.labels))
    comments = [f"construction {c.name}"]
    comments += [f"expect {k} {_fmt_value(v, names)}" for k, v in c.expected.items()]
    text = format_digraph(c.digraph, names, comments)
    files = {}
    if args.out:
        files[args.out] = text
        if args.dot:
            files[str(Path(args.out).with_suffix(".dot"))] = to_dot(c.digraph, names, c.name)
        write_all_atomic(files)
    else:
        sys.stdout.write(text)
        if args.dot:
            sys.stdout.write(to_dot(c.digraph, names, c.name))
    return EXIT_OK


# --- verify ---------------------------------------------------------------------


def cmd_verify(args) -> int:
    cfg = HarnessConfig.load(args.config)
    if args.budget is not None:
        cfg = HarnessConfig(**{**cfg.__dict__, "budget": args.budget})
    if args.check == "all":
        checks = [c for c in check_catalog() if c.applicable(args.i, args.j)]
    else:
        try:
            checks = [get_check(args.check)]
        except KeyError as exc:
            raise UsageError(str(exc)) from None
        if not checks[0].applicable(args.i, args.j):
            raise UsageError(f"check {args.check} does not apply to (i, j) = ({args.i}, {args.j})")
    reports = run_checks(checks, args.i, args.j, args.max_n, args.shards, cfg)
    for r in reports:
        print(r.line())
        if r.witness is not None:
            print(f"  minimal witness n={r.witness.n} arcs={r.witness.arcs}: {r.witness.diagnostic}")
            for line in r.witness.payload.splitlines():
                print("    " + line)
        elif r.mode == "universal":
            for v in r.violations[:3]:
                print(f"  violation {v.key}: {v.diagnostic}")
    if args.json:
        write_all_atomic({args.json: json.dumps([r.to_record() for r in reports], indent=2) + "\n"})
    return EXIT_OK if all(r.passed for r in reports) else EXIT_NO


# --- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="phylograph", description="Phylogeny graphs of degree-bounded acyclic digraphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="underlying, competition and phylogeny graphs of a dag file")
    p.add_argument("dag")
    p.add_argument("--out-prefix")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check", help="test membership in a graph class")
    p.add_argument("graph")
    p.add_argument("--class", dest="cls", required=True,
                   choices=["chordal", "diamond-free", "forest", "paths", "clique-graph-forest", "planar"])
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("realize", help="find a digraph whose phylogeny graph is the input")
    p.add_argument("graph")
    p.add_argument("--class", dest="cls", required=True, choices=["1j", "i1", "11"])
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("holes", help="list holes in canonical form")
    p.add_argument("graph")
    p.set_defaults(func=cmd_holes)

    p = sub.add_parser("map-holes", help="map each phylogeny hole to a hole of the underlying graph")
    p.add_argument("dag")
    p.add_argument("--i", type=int, default=2)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_map_holes)

    p = sub.add_parser("extremal", help="emit a named construction")
    p.add_argument("--name", required=True, choices=["fig1", "fig2-left", "fig2-right", "fig3", "clique"])
    p.add_argument("--j", type=int)
    p.add_argument("--out")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify", help="run catalog checks over enumerated instances")
    p.add_argument("--check", required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.add_argument("--config")
    p.add_argument("--json")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        for flag in ("i", "j", "max_n", "shards"):
            val = getattr(args, flag, None)
            if val is not None and val < 1:
                raise UsageError(f"--{flag.replace('_', '-')} must be >= 1")
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormatError as exc:
        print(f"malformed file: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (BudgetExceeded, MinorSearchBudgetExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
