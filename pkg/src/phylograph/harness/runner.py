"""Stream enumerated instances through catalog checks and collect reports."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path

from ..digraph import DegreeBounds, Shard, iter_ij_dags, projected_count
from ..io import format_digraph, format_graph
from .checks import GraphInstance, Instance, TheoremCheck, get_check
from .graphs import all_graphs, chordal_classes, random_graphs


class BudgetExceeded(RuntimeError):
    """Projected instance count is above the configured cap."""


@dataclass(frozen=True)
class HarnessConfig:
    budget: int = 5 * 10**8
    minor_node_budget: int = 10**7
    max_violations: int = 20
    graph_exhaustive_max_n: int = 6
    graph_samples: int = 2000
    seed: int = 2019

    @classmethod
    def load(cls, path: str | Path | None = None) -> HarnessConfig:
        if path is None:
            text = resources.files("phylograph.harness").joinpath("defaults.json").read_text()
        else:
            text = Path(path).read_text()
        raw = json.loads(text)
        known = {k: int(v) for k, v in raw.items() if k in cls.__dataclass_fields__}
        return cls(**known)


@dataclass
class Violation:
    key: tuple
    n: int
    payload: str
    diagnostic: str
    arcs: int = 0


@dataclass
class VerificationReport:
    check_id: str
    mode: str
    params: dict
    instances: int = 0
    violation_count: int = 0
    violations: list[Violation] = field(default_factory=list)
    elapsed: float = 0.0
    shards: int = 1
    witness: Violation | None = None

    @property
    def passed(self) -> bool:
        if self.mode == "search":
            return self.violation_count > 0
        return self.violation_count == 0

    def to_record(self) -> dict:
        rec = {
            "id": self.check_id,
            "mode": self.mode,
            "params": self.params,
            "instances": self.instances,
            "violations": self.violation_count,
            "passed": self.passed,
            "elapsed": round(self.elapsed, 3),
            "shards": self.shards,
            "examples": [asdict(v) | {"key": list(v.key)} for v in self.violations],
        }
        if self.witness is not None:
            rec["witness"] = asdict(self.witness) | {"key": list(self.witness.key)}
        return rec

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        label = "witnesses" if self.mode == "search" else "violations"
        p = self.params
        return (f"{verdict} {self.check_id} i={p.get('i')} j={p.get('j')} max_n={p.get('max_n')} "
                f"instances={self.instances} {label}={self.violation_count} elapsed={self.elapsed:.2f}s")


def _graph_sources(n: int, cfg: HarnessConfig):
    if n <= cfg.graph_exhaustive_max_n:
        for k, g in enumerate(all_graphs(n)):
            yield (n, 0, k), g
        return
    for k, g in enumerate(chordal_classes(n)):
        yield (n, 1, k), g
    for k, g in enumerate(random_graphs(n, cfg.graph_samples, cfg.seed)):
        yield (n, 2, k), g


def projected_instances(check: TheoremCheck, i: int, j: int, max_n: int, cfg: HarnessConfig) -> int:
    if check.domain == "graph":
        total = 0
        for n in range(1, max_n + 1):
            if n <= cfg.graph_exhaustive_max_n:
                total += 2 ** (n * (n - 1) // 2)
            else:
                total += cfg.graph_samples + 10**4
        return total
    return sum(projected_count(n, DegreeBounds(i, j)) for n in range(1, max_n + 1))


@dataclass
class _Partial:
    instances: int = 0
    violation_count: int = 0
    violations: list[Violation] = field(default_factory=list)
    elapsed: float = 0.0
    best: Violation | None = None


def _record(part: _Partial, v: Violation, cap: int, search: bool) -> None:
    part.violation_count += 1
    if len(part.violations) < cap:
        part.violations.append(v)
    if search and (part.best is None or (v.n, v.arcs, v.key) < (part.best.n, part.best.arcs, part.best.key)):
        part.best = v


def _run_level(check_ids: list[str], i: int, j: int, n: int, shard: Shard, cfg: HarnessConfig) -> list[_Partial]:
    """All checks of one domain on one vertex count, one shard."""
    checks = [get_check(c) for c in check_ids]
    parts = [_Partial() for _ in checks]
    domain = checks[0].domain
    if domain == "digraph":
        for path, d in iter_ij_dags(n, DegreeBounds(i, j), shard):
            inst = Instance(d, i, j, cfg.minor_node_budget)
            for c, part in zip(checks, parts):
                t0 = time.perf_counter()
                diag = c.predicate(inst)
                part.elapsed += time.perf_counter() - t0
                part.instances += 1
                if diag is not None:
                    _record(part, Violation((n, *path), n, format_digraph(d), diag, d.m), cfg.max_violations, c.mode == "search")
    else:
        for idx, (key, g) in enumerate(_graph_sources(n, cfg)):
            if idx % shard.count != shard.index:
                continue
            inst = GraphInstance(g, cfg.minor_node_budget)
            for c, part in zip(checks, parts):
                t0 = time.perf_counter()
                diag = c.predicate(inst)
                part.elapsed += time.perf_counter() - t0
                part.instances += 1
                if diag is not None:
                    _record(part, Violation(key, n, format_graph(g), diag, g.m), cfg.max_violations, c.mode == "search")
    return parts


def _merge(into: _Partial, parts: list[_Partial], cap: int) -> None:
    for p in parts:
        into.instances += p.instances
        into.violation_count += p.violation_count
        into.elapsed += p.elapsed
        into.violations.extend(p.violations)
        if p.best is not None and (into.best is None or (p.best.n, p.best.arcs, p.best.key) < (into.best.n, into.best.arcs, into.best.key)):
            into.best = p.best
    into.violations.sort(key=lambda v: v.key)
    del into.violations[cap:]


def run_checks(
    checks: list[TheoremCheck],
    i: int,
    j: int,
    max_n: int,
    shards: int = 1,
    cfg: HarnessConfig | None = None,
    min_n: int = 1,
) -> list[VerificationReport]:
    """Run checks sharing one enumeration per domain.

    Search-mode checks stop after the first vertex count that yields a
    witness; the reported witness is the least by (n, arc count,
    enumeration order). Results do not depend on ``shards``.
    """
    cfg = cfg or HarnessConfig()
    for c in checks:
        if not c.applicable(i, j):
            raise ValueError(f"check {c.id} does not apply to (i, j) = ({i}, {j})")
        projected = projected_instances(c, i, j, max_n, cfg)
        if projected > cfg.budget:
            raise BudgetExceeded(f"{c.id}: projected {projected} instances exceeds budget {cfg.budget}")

    totals = {c.id: _Partial() for c in checks}
    done: set[str] = set()
    for domain in ("digraph", "graph"):
        group = [c for c in checks if c.domain == domain]
        for n in range(min_n, max_n + 1):
            active = [c.id for c in group if c.id not in done]
            if not active:
                break
            if shards > 1:
                with ProcessPoolExecutor(max_workers=shards) as pool:
                    futures = [pool.submit(_run_level, active, i, j, n, Shard(s, shards), cfg) for s in range(shards)]
                    results = [f.result() for f in futures]
            else:
                results = [_run_level(active, i, j, n, Shard(), cfg)]
            for k, cid in enumerate(active):
                _merge(totals[cid], [r[k] for r in results], cfg.max_violations)
                c = get_check(cid)
                if c.mode == "search" and totals[cid].violation_count:
                    done.add(cid)

    reports = []
    for c in checks:
        t = totals[c.id]
        params = {"i": i, "j": j, "max_n": max_n} if c.domain == "digraph" else {"i": None, "j": None, "max_n": max_n}
        reports.append(VerificationReport(
            c.id, c.mode, params, t.instances, t.violation_count, t.violations, t.elapsed, shards, t.best,
        ))
    return reports


def run_check(check: TheoremCheck, i: int, j: int, max_n: int, shards: int = 1, cfg: HarnessConfig | None = None) -> VerificationReport:
    return run_checks([check], i, j, max_n, shards, cfg)[0]
