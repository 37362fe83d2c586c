"""Simple undirected graphs stored as bitset adjacency rows.

Row ``adj[v]`` is a Python int whose bit ``u`` is set iff ``uv`` is an edge.
Graphs are immutable; every mutating helper returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

# No hard limit on n; isomorphism routines enforce their own cap.
MAX_VERTICES = 4096


class GraphError(ValueError):
    """Raised on invalid graph construction or edits."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond n")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency at {u},{v}")

    # constructors

    @classmethod
    def trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        """Skip validation; for internal callers that build rows symmetrically."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> Graph:
        return cls.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))

    # queries

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return tuple((u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1)))

    @property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def non_edges(self) -> list[tuple[int, int]]:
        return list(self.complement().edges)

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    # derived graphs

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise GraphError(f"cannot add loop at {u}")
        if self.has_edge(u, v):
            raise GraphError(f"edge {u}-{v} already present")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph.trusted(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"edge {u}-{v} not present")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph.trusted(self.n, tuple(rows))

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph.trusted(self.n, tuple(full ^ r ^ (1 << v) for v, r in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph whose vertex ``perm[v]`` plays the role of ``v``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            rows[perm[v]] = mask_of(perm[u] for u in bits(row))
        return Graph.trusted(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabelled ``0..len(vertices)-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            ((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def union(self, other: Graph) -> Graph:
        if other.n != self.n:
            raise GraphError("union needs equal vertex counts")
        return Graph.trusted(self.n, tuple(a | b for a, b in zip(self.adj, other.adj)))

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def __str__(self) -> str:
        return f"Graph(n={self.n}, e={self.num_edges})"


# cliques


def find_clique(adj: Sequence[int], size: int, within: int) -> list[int] | None:
    """A clique of ``size`` vertices inside the mask ``within``, or None.

    Branches on common-neighbourhood bitsets, pruning when fewer candidates
    remain than vertices still needed.
    """
    if size <= 0:
        return []
    if popcount(within) < size:
        return None
    if size == 1:
        return [(within & -within).bit_length() - 1]
    if size == 2:
        for v in bits(within):
            nb = adj[v] & within
            if nb:
                return [v, (nb & -nb).bit_length() - 1]
        return None
    cand = within
    while cand:
        if popcount(cand) < size:
            return None
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        sub = find_clique(adj, size - 1, adj[v] & cand)
        if sub is not None:
            return [v, *sub]
    return None


def has_clique(adj: Sequence[int], size: int, within: int) -> bool:
    return find_clique(adj, size, within) is not None


def contains_clique(g: Graph, t: int, within: int | None = None) -> tuple[bool, list[int] | None]:
    """Whether ``g`` has ``t`` pairwise adjacent vertices (inside ``within``).

    Returns ``(found, witness)``; the witness is sorted when found.
    """
    if t < 1:
        raise ValueError("clique order must be at least 1")
    mask = g.vertex_mask if within is None else within & g.vertex_mask
    w = find_clique(g.adj, t, mask)
    return (True, sorted(w)) if w is not None else (False, None)


def clique_number(adj: Sequence[int], within: int) -> int:
    """Size of a maximum clique inside ``within`` (simple branch and bound)."""
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        while cand:
            if size + popcount(cand) <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(size + 1, cand & adj[v])

    expand(0, within)
    return best


def independence_number(g: Graph, within: int | None = None) -> int:
    mask = g.vertex_mask if within is None else within
    return clique_number(g.complement().adj, mask)


def count_triangles_on_edge(g: Graph, u: int, v: int) -> int:
    return popcount(g.adj[u] & g.adj[v])


# connectivity


def is_connected(g: Graph, within: int | None = None) -> bool:
    mask = g.vertex_mask if within is None else within
    if not mask:
        return True
    seen = mask & -mask
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def is_2connected(g: Graph) -> bool:
    """Connected, at least 3 vertices, and no cut vertex (lowpoint DFS)."""
    n = g.n
    if n < 3 or not is_connected(g):
        return False
    disc = [-1] * n
    low = [0] * n
    disc[0] = low[0] = 0
    counter = 1
    root_children = 0
    # iterative DFS over (vertex, parent, remaining-neighbour mask)
    stack = [(0, -1, g.adj[0])]
    while stack:
        v, parent, rest = stack[-1]
        if rest:
            lowbit = rest & -rest
            w = lowbit.bit_length() - 1
            stack[-1] = (v, parent, rest ^ lowbit)
            if disc[w] == -1:
                disc[w] = low[w] = counter
                counter += 1
                if v == 0:
                    root_children += 1
                stack.append((w, v, g.adj[w]))
            elif w != parent:
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if parent != 0 and low[v] >= disc[parent]:
                    return False
    return root_children == 1
