"""Search for digraphs with chordal underlying graph and non-chordal
phylogeny graph, for bounds outside the range where that cannot happen.

    python3 scripts/find_counterexample.py --i 3 --j 2 --max-n 7
"""

import argparse

from phylograph.harness.checks import get_check
from phylograph.harness.runner import run_check


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--i", type=int, default=3)
    ap.add_argument("--j", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--shards", type=int, default=1)
    args = ap.parse_args()
    r = run_check(get_check("thm_2j_chordal_witness"), args.i, args.j, args.max_n, args.shards)
    print(r.line())
    if r.witness is None:
        return 1
    w = r.witness
    print(f"minimal witness: n={w.n}, {w.arcs} arcs, enumeration path {w.key[1:]}")
    print(w.diagnostic)
    print(w.payload, end="")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
