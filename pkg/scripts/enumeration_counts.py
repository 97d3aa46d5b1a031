"""Print enumeration sizes of the canonical (i, j) family next to the projected bound.

    python3 scripts/enumeration_counts.py --max-n 7
"""

import argparse
import time

from phylograph.digraph import DegreeBounds, enumerate_ij_dags, projected_count


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--bounds", default="1,1 1,2 1,3 2,1 3,1 2,2 2,3 3,2")
    args = ap.parse_args()
    print("i j n visited projected seconds")
    for pair in args.bounds.split():
        i, j = map(int, pair.split(","))
        b = DegreeBounds(i, j)
        for n in range(1, args.max_n + 1):
            t0 = time.perf_counter()
            stats = enumerate_ij_dags(n, b, lambda d: None)
            print(f"{i} {j} {n} {stats.visited} {projected_count(n, b)} {time.perf_counter() - t0:.2f}")


if __name__ == "__main__":
    main()
