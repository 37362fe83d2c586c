"""Red/blue edge colourings and the critical-colouring search engine.

A colouring is *critical* for a pair ``(t, k)`` when the red graph has no
``K_t`` and every vertex has blue degree at most ``k - 1``.  The engine is a
depth-first search over edges with propagation to a fixpoint after every
decision:

* a vertex whose blue degree reaches ``k - 1`` forces its uncoloured edges red;
* an uncoloured edge ``uv`` with a red ``K_{t-2}`` inside ``N_r(u) & N_r(v)``
  is forced blue.

Red is tried before blue.  The same engine decides existence, enumerates,
counts and maximises the number of red edges (branch and bound).
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .graph import Graph, bits, contains_clique, has_clique, popcount


class Color(str, enum.Enum):
    RED = "R"
    BLUE = "B"


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class PairParams:
    """Target pair ``(K_t, K_{1,k})``."""

    t: int
    k: int

    def __post_init__(self) -> None:
        if self.t < 3 or self.k < 3:
            raise ValueError(f"need t >= 3 and k >= 3, got t={self.t}, k={self.k}")


@dataclass(frozen=True)
class SearchBudget:
    """Cooperative limits. ``None`` means unlimited; zero means no search at all."""

    node_limit: int | None = None
    wall_limit: float | None = None

    def __post_init__(self) -> None:
        if self.node_limit is not None and self.node_limit < 0:
            raise ValueError("node_limit must be non-negative")
        if self.wall_limit is not None and self.wall_limit < 0:
            raise ValueError("wall_limit must be non-negative")


UNLIMITED = SearchBudget()


class Status(str, enum.Enum):
    FOUND = "Found"
    NONE_EXISTS = "NoneExists"
    EXHAUSTED = "Exhausted"


@dataclass(frozen=True)
class EdgeColoring:
    """Total red/blue colouring of ``graph``; stored as its red edge set."""

    graph: Graph
    red: frozenset[tuple[int, int]]

    @classmethod
    def from_red(cls, graph: Graph, red: Iterable[tuple[int, int]]) -> EdgeColoring:
        norm = frozenset((min(u, v), max(u, v)) for u, v in red)
        for u, v in norm:
            if not graph.has_edge(u, v):
                raise ColoringError(f"red edge {u}-{v} is not an edge of the host graph")
        return cls(graph, norm)

    @classmethod
    def from_assignment(cls, graph: Graph, colors: dict[tuple[int, int], Color]) -> EdgeColoring:
        norm = {(min(u, v), max(u, v)): Color(c) for (u, v), c in colors.items()}
        if set(norm) != set(graph.edges):
            missing = set(graph.edges) - set(norm)
            extra = set(norm) - set(graph.edges)
            raise ColoringError(f"colouring does not match host: missing {sorted(missing)[:5]}, extra {sorted(extra)[:5]}")
        return cls(graph, frozenset(e for e, c in norm.items() if c is Color.RED))

    @property
    def blue(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.graph.edges) - self.red

    def color(self, u: int, v: int) -> Color:
        e = (min(u, v), max(u, v))
        if not self.graph.has_edge(*e):
            raise ColoringError(f"{u}-{v} is not an edge")
        return Color.RED if e in self.red else Color.BLUE

    def red_graph(self) -> Graph:
        return Graph.from_edges(self.graph.n, self.red)

    def blue_graph(self) -> Graph:
        return Graph.from_edges(self.graph.n, self.blue)

    def blue_degrees(self) -> list[int]:
        return self.blue_graph().degrees()

    def to_text(self) -> str:
        """One ``u v R|B`` line per edge, edges in lexicographic order."""
        return "".join(f"{u} {v} {self.color(u, v).value}\n" for u, v in self.graph.edges)

    @classmethod
    def from_text(cls, graph: Graph, text: str) -> EdgeColoring:
        colors = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            try:
                u, v, c = line.split()
                colors[(int(u), int(v))] = Color(c)
            except ValueError:
                raise ColoringError(f"bad colouring line {line!r}") from None
        return cls.from_assignment(graph, colors)


@dataclass
class SearchOutcome:
    status: Status
    witness: EdgeColoring | None = None
    nodes: int = 0


@dataclass
class Enumeration:
    colorings: list[EdgeColoring] = field(default_factory=list)
    complete: bool = False
    nodes: int = 0


def is_critical(g: Graph, c: EdgeColoring, p: PairParams) -> bool:
    if c.graph != g:
        raise ColoringError("colouring belongs to a different host graph")
    if max(c.blue_degrees(), default=0) > p.k - 1:
        return False
    found, _ = contains_clique(c.red_graph(), p.t)
    return not found


# --- search engine --------------------------------------------------------

_RED = 1
_BLUE = 2


class _BudgetHit(Exception):
    pass


class _State:
    __slots__ = ("col", "red", "bdeg", "unc", "nred", "nunc", "ptr")

    def copy(self) -> _State:
        s = _State.__new__(_State)
        s.col = self.col[:]
        s.red = self.red[:]
        s.bdeg = self.bdeg[:]
        s.unc = self.unc[:]
        s.nred = self.nred
        s.nunc = self.nunc
        s.ptr = self.ptr
        return s


class _Engine:
    def __init__(self, g: Graph, p: PairParams, budget: SearchBudget):
        self.g = g
        self.t = p.t
        self.cap = p.k - 1
        deg = g.degrees()
        # most constrained first: larger endpoint degree sum earlier
        order = sorted(g.edges, key=lambda e: (-(deg[e[0]] + deg[e[1]]), e))
        self.edges = order
        self.eu = [u for u, _ in order]
        self.ev = [v for _, v in order]
        self.eid: list[dict[int, int]] = [dict() for _ in range(g.n)]
        for i, (u, v) in enumerate(order):
            self.eid[u][v] = i
            self.eid[v][u] = i
        self.node_limit = budget.node_limit
        self.deadline = None if budget.wall_limit is None else time.monotonic() + budget.wall_limit
        self.nodes = 0
        # leaves with fewer red edges than this are pruned (branch and bound)
        self.bound: int | None = None

    def root(self) -> _State:
        s = _State()
        s.col = bytearray(len(self.edges))
        s.red = [0] * self.g.n
        s.bdeg = [0] * self.g.n
        s.unc = list(self.g.adj)
        s.nred = 0
        s.nunc = len(self.edges)
        s.ptr = 0
        return s

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _BudgetHit
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _BudgetHit

    def assign(self, st: _State, e0: int, c0: int) -> bool:
        """Colour edge ``e0`` and propagate; False on contradiction."""
        col, red, bdeg, unc = st.col, st.red, st.bdeg, st.unc
        eu, ev, eid = self.eu, self.ev, self.eid
        t, cap = self.t, self.cap
        need = t - 2
        todo = [(e0, c0)]
        while todo:
            e, c = todo.pop()
            cur = col[e]
            if cur:
                if cur != c:
                    return False
                continue
            u = eu[e]
            v = ev[e]
            bu = 1 << u
            bv = 1 << v
            if c == _RED:
                common = red[u] & red[v]
                if common and (need == 1 or has_clique(red, need, common)):
                    return False
                col[e] = _RED
                st.nred += 1
                st.nunc -= 1
                red[u] |= bv
                red[v] |= bu
                unc[u] &= ~bv
                unc[v] &= ~bu
                if need == 1:
                    for w in bits(unc[u] & red[v]):
                        todo.append((eid[u][w], _BLUE))
                    for w in bits(unc[v] & red[u]):
                        todo.append((eid[v][w], _BLUE))
                else:
                    for a, b in ((u, v), (v, u)):
                        ra = red[a]
                        for w in bits(unc[a] & red[b]):
                            if has_clique(red, need, ra & red[w]):
                                todo.append((eid[a][w], _BLUE))
                    inside = red[u] & red[v]
                    if inside:
                        for x in bits(inside):
                            rx = red[x]
                            for y in bits(unc[x] & inside):
                                if y > x and has_clique(red, need, rx & red[y]):
                                    todo.append((eid[x][y], _BLUE))
            else:
                col[e] = _BLUE
                st.nunc -= 1
                unc[u] &= ~bv
                unc[v] &= ~bu
                for a in (u, v):
                    d = bdeg[a] + 1
                    bdeg[a] = d
                    if d > cap:
                        return False
                    if d == cap:
                        for w in bits(unc[a]):
                            todo.append((eid[a][w], _RED))
        return True

    def next_edge(self, st: _State) -> int:
        col = st.col
        i = st.ptr
        m = len(col)
        while i < m and col[i]:
            i += 1
        st.ptr = i
        return i

    def to_coloring(self, st: _State) -> EdgeColoring:
        red = frozenset(self.edges[i] for i, c in enumerate(st.col) if c == _RED)
        return EdgeColoring(self.g, red)

    def leaves(self) -> Iterator[_State]:
        """Depth-first over complete critical colourings.

        Callers may raise ``bound`` between yields.
        """
        stack = [self.root()]
        while stack:
            st = stack.pop()
            self.tick()
            if self.bound is not None and st.nred + st.nunc < self.bound:
                continue
            e = self.next_edge(st)
            if e == len(st.col):
                yield st
                continue
            blue = st.copy()
            if self.assign(blue, e, _BLUE):
                stack.append(blue)
            if self.assign(st, e, _RED):
                stack.append(st)


def find_critical(g: Graph, p: PairParams, budget: SearchBudget = UNLIMITED) -> SearchOutcome:
    """Search for one critical colouring of ``g``."""
    eng = _Engine(g, p, budget)
    try:
        for st in eng.leaves():
            return SearchOutcome(Status.FOUND, eng.to_coloring(st), eng.nodes)
    except _BudgetHit:
        return SearchOutcome(Status.EXHAUSTED, None, eng.nodes)
    return SearchOutcome(Status.NONE_EXISTS, None, eng.nodes)


def enumerate_critical(
    g: Graph, p: PairParams, limit: int | None = None, budget: SearchBudget = UNLIMITED
) -> Enumeration:
    """All critical colourings of ``g`` (labelled; no symmetry reduction).

    ``complete`` is set when the search finished and found at most ``limit``.
    """
    eng = _Engine(g, p, budget)
    out = Enumeration()
    try:
        for st in eng.leaves():
            if limit is not None and len(out.colorings) >= limit:
                out.nodes = eng.nodes
                return out
            out.colorings.append(eng.to_coloring(st))
    except _BudgetHit:
        out.nodes = eng.nodes
        return out
    out.complete = True
    out.nodes = eng.nodes
    return out


def count_critical(g: Graph, p: PairParams, budget: SearchBudget = UNLIMITED) -> tuple[int, bool, int]:
    """``(count, complete, nodes)`` without materialising colourings."""
    eng = _Engine(g, p, budget)
    count = 0
    try:
        for _ in eng.leaves():
            count += 1
    except _BudgetHit:
        return count, False, eng.nodes
    return count, True, eng.nodes


def max_red_critical(g: Graph, p: PairParams, budget: SearchBudget = UNLIMITED) -> SearchOutcome:
    """Critical colouring with the most red edges (branch and bound).

    States that cannot beat the incumbent even if every uncoloured edge went
    red are cut.
    """
    eng = _Engine(g, p, budget)
    best: _State | None = None
    try:
        for st in eng.leaves():
            if best is None or st.nred > best.nred:
                best = st.copy()
                eng.bound = st.nred + 1
    except _BudgetHit:
        return SearchOutcome(Status.EXHAUSTED, eng.to_coloring(best) if best else None, eng.nodes)
    if best is None:
        return SearchOutcome(Status.NONE_EXISTS, None, eng.nodes)
    return SearchOutcome(Status.FOUND, eng.to_coloring(best), eng.nodes)


def enumerate_max_red(g: Graph, p: PairParams, budget: SearchBudget = UNLIMITED) -> Enumeration:
    """Every critical colouring attaining the maximum red edge count."""
    first = max_red_critical(g, p, budget)
    out = Enumeration(nodes=first.nodes)
    if first.status is Status.EXHAUSTED:
        return out
    if first.status is Status.NONE_EXISTS:
        out.complete = True
        return out
    target = len(first.witness.red)
    eng = _Engine(g, p, budget)
    eng.bound = target
    try:
        for st in eng.leaves():
            if st.nred == target:
                out.colorings.append(eng.to_coloring(st))
    except _BudgetHit:
        out.nodes += eng.nodes
        return out
    out.nodes += eng.nodes
    out.complete = True
    return out


# --- independent oracle ---------------------------------------------------

BRUTE_FORCE_EDGE_CAP = 24


def brute_force_critical(g: Graph, p: PairParams) -> int:
    """Count critical colourings by scanning all ``2**e`` assignments.

    Independent of the search engine: each assignment is a bitmask of red
    edges, checked against every ``K_t`` of ``g`` and every vertex star.
    """
    edges = list(g.edges)
    m = len(edges)
    if m > BRUTE_FORCE_EDGE_CAP:
        raise ValueError(f"{m} edges exceeds brute-force cap {BRUTE_FORCE_EDGE_CAP}")
    index = {e: i for i, e in enumerate(edges)}
    incident = [0] * g.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    cliques = []
    for q in _all_cliques(g, p.t):
        em = 0
        for a in range(len(q)):
            for b in range(a + 1, len(q)):
                em |= 1 << index[(q[a], q[b])]
        cliques.append(em)
    cap = p.k - 1
    total = 0
    chunk = 1 << 20
    full = (1 << m) - 1
    for start in range(0, 1 << m, chunk):
        red = np.arange(start, min(start + chunk, 1 << m), dtype=np.uint32)
        blue = np.uint32(full) ^ red
        ok = np.ones(red.shape, dtype=bool)
        for em in cliques:
            q = np.uint32(em)
            ok &= (red & q) != q
        for inc in incident:
            if popcount(inc) > cap:
                ok &= np.bitwise_count(blue & np.uint32(inc)) <= cap
        total += int(ok.sum())
    return total


def _all_cliques(g: Graph, t: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def grow(clique: tuple[int, ...], cand: int) -> None:
        if len(clique) == t:
            out.append(clique)
            return
        for v in bits(cand):
            grow(clique + (v,), cand & g.adj[v] & ~((2 << v) - 1))

    grow((), g.vertex_mask)
    return out
