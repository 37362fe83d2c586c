"""Exhaustive co-critical graphs on few vertices; prints graph6 and edge counts."""

import argparse
import time

from cocrit import PairParams, emit_graph6
from cocrit.search import enumerate_small_cocritical, summarize


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t", type=int, default=3)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--n", type=int, nargs="+", default=[7, 8])
    args = ap.parse_args()
    p = PairParams(args.t, args.k)
    for n in args.n:
        t0 = time.perf_counter()
        graphs = enumerate_small_cocritical(n, p)
        print(f"n={n} {summarize(graphs)} ({time.perf_counter() - t0:.1f}s)")
        for g in graphs:
            print(f"  {emit_graph6(g)}  e={g.num_edges}  degrees={sorted(g.degrees())}")


if __name__ == "__main__":
    main()
