"""Instance generators and searches beyond the fixed constructions."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations

from .arrowing import Arrow, arrows, ramsey_star
from .coloring import PairParams, SearchBudget
from .cocritical import Verdict, is_Kt_saturated, verify_cocritical
from .constructions import ConstructionError, build, check_regime
from .graph import Graph, bits, has_clique
from .iso import are_isomorphic, invariant

ENUMERATION_CAP = 8


def random_maximal_ktfree(n: int, t: int, seed: int) -> Graph:
    """Greedy K_t-saturated graph: visit all pairs in shuffled order, keep an
    edge whenever it does not close a K_t."""
    if n < t:
        raise ValueError(f"need n >= t, got n={n}, t={t}")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    rows = [0] * n
    for u, v in pairs:
        if not has_clique(rows, t - 2, rows[u] & rows[v]):
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph.trusted(n, tuple(rows))


# --- exhaustive enumeration at tiny n --------------------------------------


class IsoClasses:
    """Isomorphism-reduced collection, bucketed by a refinement invariant."""

    def __init__(self) -> None:
        self.buckets: dict[tuple, list[Graph]] = {}

    def add(self, g: Graph) -> bool:
        bucket = self.buckets.setdefault(invariant(g), [])
        for h in bucket:
            if are_isomorphic(g, h)[0]:
                return False
        bucket.append(g)
        return True

    def graphs(self) -> list[Graph]:
        return [g for bucket in self.buckets.values() for g in bucket]

    def __len__(self) -> int:
        return sum(len(b) for b in self.buckets.values())


def ktfree_classes(n: int, t: int) -> list[Graph]:
    """All K_t-free graphs on n vertices up to isomorphism (vertex-by-vertex)."""
    level = [Graph.empty(0)]
    for m in range(n):
        nxt = IsoClasses()
        for h in level:
            for nb in range(1 << m):
                # the new vertex m must not see a K_{t-1}
                if has_clique(h.adj, t - 1, nb):
                    continue
                rows = list(h.adj) + [nb]
                for u in bits(nb):
                    rows[u] |= 1 << m
                nxt.add(Graph.trusted(m + 1, tuple(rows)))
        level = nxt.graphs()
    return level


def maximal_bounded_subgraphs(host: Graph, cap: int) -> list[frozenset[tuple[int, int]]]:
    """Edge sets B of ``host`` with max degree <= cap that are maximal: every
    host edge outside B has an endpoint already at degree ``cap``."""
    edges = list(host.edges)
    m = len(edges)
    remaining = host.degrees()
    deg = [0] * host.n
    chosen: list[tuple[int, int]] = []
    skipped: list[tuple[int, int]] = []
    out: list[frozenset[tuple[int, int]]] = []

    def dead(e: tuple[int, int]) -> bool:
        u, v = e
        return deg[u] + remaining[u] < cap and deg[v] + remaining[v] < cap

    def rec(i: int) -> None:
        if i == m:
            if all(deg[u] == cap or deg[v] == cap for u, v in skipped):
                out.append(frozenset(chosen))
            return
        u, v = edges[i]
        remaining[u] -= 1
        remaining[v] -= 1
        if deg[u] < cap and deg[v] < cap:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            rec(i + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        skipped.append((u, v))
        if not dead((u, v)):
            rec(i + 1)
        skipped.pop()
        remaining[u] += 1
        remaining[v] += 1

    rec(0)
    return out


def enumerate_small_cocritical(n: int, p: PairParams, jobs: int = 1) -> list[Graph]:
    """Isomorphism classes of (K_t, K_{1,k})-co-critical graphs on n vertices.

    Any co-critical G has a maximum-red critical colouring whose red graph is
    K_t-saturated and whose blue graph is a maximal subgraph of the red
    complement with degrees <= k-1. So candidates are generated as such pairs
    and then verified exactly.
    """
    if n > ENUMERATION_CAP:
        raise ValueError(f"exhaustive enumeration capped at n={ENUMERATION_CAP}")
    if n < ramsey_star(p.t, p.k):
        return []
    candidates = IsoClasses()
    for red in ktfree_classes(n, p.t):
        if not is_Kt_saturated(red, p.t):
            continue
        for blue in maximal_bounded_subgraphs(red.complement(), p.k - 1):
            g = red.union(Graph.from_edges(n, blue))
            if not g.is_complete():
                candidates.add(g)
    found = []
    for g in sorted(candidates.graphs(), key=lambda h: (h.num_edges, h.adj)):
        if verify_cocritical(g, p, fail_fast=True).verdict is Verdict.COCRITICAL:
            found.append(g)
    return found


# --- local search -----------------------------------------------------------


@dataclass
class LocalSearchResult:
    graph: Graph
    verdict: Verdict
    start_edges: int
    moves: int = 0
    accepted: int = 0
    nodes: int = 0
    history: list[int] = field(default_factory=list)

    @property
    def edges(self) -> int:
        return self.graph.num_edges


class _Spend:
    """Shared node/time allowance across many engine calls."""

    def __init__(self, budget: SearchBudget):
        self.nodes_left = budget.node_limit
        self.deadline = None if budget.wall_limit is None else time.monotonic() + budget.wall_limit
        self.used = 0

    def slice(self) -> SearchBudget | None:
        if self.nodes_left is not None and self.nodes_left <= 0:
            return None
        wall = None
        if self.deadline is not None:
            wall = self.deadline - time.monotonic()
            if wall <= 0:
                return None
        return SearchBudget(self.nodes_left, wall)

    def charge(self, nodes: int) -> None:
        self.used += nodes
        if self.nodes_left is not None:
            self.nodes_left -= nodes


def _saturate(g: Graph, p: PairParams, order: list[tuple[int, int]], spend: _Spend) -> Graph | None:
    """Add pairs from ``order`` while the graph keeps a critical colouring."""
    for u, v in order:
        if g.has_edge(u, v):
            continue
        b = spend.slice()
        if b is None:
            return None
        h = g.add_edge(u, v)
        res = arrows(h, p, b)
        spend.charge(res.nodes)
        if res.status is Arrow.UNKNOWN:
            return None
        if res.status is Arrow.NOT_ARROWS:
            g = h
    return g


def _certify(g: Graph, p: PairParams, spend: _Spend) -> Verdict | None:
    b = spend.slice()
    if b is None:
        return None
    rep = verify_cocritical(g, p, b)
    spend.charge(rep.nodes)
    return rep.verdict


def starting_graph(p: PairParams, n: int, rng: random.Random, spend: _Spend) -> Graph | None:
    try:
        check_regime(p.t, p.k, n)
    except ConstructionError:
        pairs = list(combinations(range(n), 2))
        rng.shuffle(pairs)
        return _saturate(Graph.empty(n), p, pairs, spend)
    return build(p.t, p.k, n)[0]


def local_search_cocritical(
    p: PairParams, n: int, seed: int, budget: SearchBudget, max_moves: int | None = None
) -> LocalSearchResult | None:
    """Look for co-critical graphs on n vertices with few edges.

    A move deletes one random edge and re-saturates greedily in random order
    (the deleted pair is offered last). The outcome is maximal non-arrowing,
    hence co-critical, and is still re-verified before acceptance. Returns
    None if no starting graph could be produced within budget.
    """
    if n < ramsey_star(p.t, p.k):
        raise ValueError(f"need n >= (t-1)k+1 = {ramsey_star(p.t, p.k)}")
    rng = random.Random(seed)
    spend = _Spend(budget)
    start = starting_graph(p, n, rng, spend)
    if start is None:
        return None
    verdict = _certify(start, p, spend)
    if verdict is None:
        return LocalSearchResult(start, Verdict.UNVERIFIED, start.num_edges, nodes=spend.used)
    if verdict is not Verdict.COCRITICAL:
        raise AssertionError(f"starting graph failed verification: {verdict}")
    best = current = start
    result = LocalSearchResult(best, verdict, start.num_edges, history=[start.num_edges])
    while max_moves is None or result.moves < max_moves:
        if spend.slice() is None:
            break
        result.moves += 1
        u, v = rng.choice(current.edges)
        trimmed = current.remove_edge(u, v)
        pairs = [e for e in trimmed.non_edges() if e != (u, v)]
        rng.shuffle(pairs)
        cand = _saturate(trimmed, p, pairs + [(u, v)], spend)
        if cand is None or cand.num_edges > current.num_edges:
            continue
        if _certify(cand, p, spend) is not Verdict.COCRITICAL:
            continue
        result.accepted += 1
        current = cand
        if cand.num_edges < best.num_edges:
            best = cand
            result.history.append(cand.num_edges)
    result.graph = best
    result.nodes = spend.used
    return result


def summarize(graphs: list[Graph]) -> dict:
    return {
        "count": len(graphs),
        "min_edges": min((g.num_edges for g in graphs), default=None),
        "max_edges": max((g.num_edges for g in graphs), default=None),
    }


__all__ = [
    "IsoClasses",
    "LocalSearchResult",
    "enumerate_small_cocritical",
    "ktfree_classes",
    "local_search_cocritical",
    "maximal_bounded_subgraphs",
    "random_maximal_ktfree",
    "summarize",
]
