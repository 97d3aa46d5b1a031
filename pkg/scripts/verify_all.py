"""Run the whole catalog over the desk-scale ranges and write one JSON report.

    python3 scripts/verify_all.py --out report.json [--shards 4] [--quick]
"""

import argparse
import json
import time

from phylograph.harness.checks import CATALOG
from phylograph.harness.runner import HarnessConfig, run_checks
from phylograph.io import write_atomic

# (i, j, max_n); quick mode trims one vertex off each range
RANGES = [(1, 1, 7), (1, 2, 7), (1, 3, 7), (2, 1, 7), (3, 1, 7), (2, 2, 7), (2, 3, 6), (3, 2, 7)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="verification.json")
    ap.add_argument("--shards", type=int, default=1)
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--config")
    args = ap.parse_args()
    cfg = HarnessConfig.load(args.config)
    records = []
    ok = True
    t0 = time.perf_counter()
    for i, j, max_n in RANGES:
        max_n -= args.quick
        checks = [c for c in CATALOG if c.domain == "digraph" and c.applicable(i, j)]
        for r in run_checks(checks, i, j, max_n, args.shards, cfg):
            print(r.line(), flush=True)
            records.append(r.to_record())
            ok &= r.passed
    graph_checks = [c for c in CATALOG if c.domain == "graph"]
    for r in run_checks(graph_checks, 1, 1, 7 - args.quick, args.shards, cfg):
        print(r.line(), flush=True)
        records.append(r.to_record())
        ok &= r.passed
    write_atomic(args.out, json.dumps(records, indent=2) + "\n")
    print(f"{'ALL PASS' if ok else 'FAILURES'} in {time.perf_counter() - t0:.0f}s; report at {args.out}")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
