"""Local search for sparse co-critical graphs, compared with the lower bound."""

import argparse

from cocrit import PairParams, SearchBudget, lower_bound_edges
from cocrit.constructions import ConstructionError, upper_edge_count
from cocrit.search import local_search_cocritical


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t", type=int, default=3)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--n", type=int, nargs="+", default=[9, 10, 11, 12, 13, 14])
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--nodes", type=int, default=200000)
    args = ap.parse_args()
    p = PairParams(args.t, args.k)
    for n in args.n:
        best = None
        for seed in range(args.seeds):
            res = local_search_cocritical(p, n, seed, SearchBudget(node_limit=args.nodes))
            if res is not None and (best is None or res.edges < best.edges):
                best = res
        try:
            construction = upper_edge_count(args.t, args.k, n)
        except ConstructionError:
            construction = None
        lower = lower_bound_edges(args.t, args.k, n) if args.t == 3 else None
        found = None if best is None else (best.edges, best.verdict.value)
        print(f"n={n} best={found} construction={construction} lower_bound={lower}")


if __name__ == "__main__":
    main()
