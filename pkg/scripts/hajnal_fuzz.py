"""Random K_t-saturated graphs against the Hajnal dichotomy and the
Duffus-Hanson bound e >= 3n-15 (triangle-free, min degree 3, n >= 10)."""

import argparse
import random
from collections import Counter

from cocrit.cocritical import hajnal_dichotomy
from cocrit.search import random_maximal_ktfree


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=10000)
    ap.add_argument("--max-n", type=int, default=30)
    args = ap.parse_args()
    tally: Counter = Counter()
    tightest = None
    for seed in range(args.samples):
        rng = random.Random(seed)
        t = rng.choice((3, 4, 5))
        n = rng.randint(t, args.max_n)
        g = random_maximal_ktfree(n, t, seed)
        tally[("hajnal", t, hajnal_dichotomy(g, t))] += 1
        if t == 3 and g.min_degree() == 3 and n >= 10:
            slack = g.num_edges - (3 * n - 15)
            tally[("duffus-hanson", slack >= 0)] += 1
            if tightest is None or slack < tightest[0]:
                tightest = (slack, seed, n)
    for key, val in sorted(tally.items(), key=str):
        print(key, val)
    print("smallest Duffus-Hanson slack (slack, seed, n):", tightest)


if __name__ == "__main__":
    main()
