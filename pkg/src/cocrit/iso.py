"""Isomorphism and automorphism groups for small graphs.

Equitable-partition refinement with individualisation and backtracking.
Nothing is cached between calls; instances in this project are small.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial

from .graph import Graph, bits

ISO_CAP = 64


class TooLargeError(ValueError):
    """Graph exceeds the vertex cap of the isomorphism routines."""


def _check_cap(g: Graph) -> None:
    if g.n > ISO_CAP:
        raise TooLargeError(f"n={g.n} exceeds isomorphism cap {ISO_CAP}")


def _refine(adj, colors: list[int]) -> tuple[list[int], tuple]:
    """Coarsest equitable refinement of ``colors`` plus a trace of the splits.

    Colours are renumbered by the rank of their signature, so two graphs give
    equal traces only if their refinements correspond cell for cell.
    """
    trace = []
    ncol = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in bits(row)))) for v, row in enumerate(adj)]
        counts = Counter(sigs)
        order = sorted(counts)
        trace.append(tuple((s, counts[s]) for s in order))
        rank = {s: i for i, s in enumerate(order)}
        colors = [rank[s] for s in sigs]
        if len(order) == ncol:
            return colors, tuple(trace)
        ncol = len(order)


def _individualize(colors: list[int], v: int) -> list[int]:
    out = [2 * c for c in colors]
    out[v] += 1
    return out


def _target_cell(colors: list[int]) -> int | None:
    """Colour of the smallest non-singleton cell, ties broken by colour."""
    sizes = Counter(colors)
    best = None
    for c, s in sizes.items():
        if s > 1 and (best is None or (s, c) < (sizes[best], best)):
            best = c
    return best


def _is_iso_map(g: Graph, h: Graph, phi: list[int]) -> bool:
    for v, row in enumerate(g.adj):
        image = 0
        for u in bits(row):
            image |= 1 << phi[u]
        if image != h.adj[phi[v]]:
            return False
    return True


def _extend(g: Graph, h: Graph, cg: list[int], ch: list[int]) -> list[int] | None:
    """An isomorphism g -> h respecting the equitable colourings, or None."""
    cell = _target_cell(cg)
    if cell is None:
        where = {c: w for w, c in enumerate(ch)}
        phi = [where[c] for c in cg]
        return phi if _is_iso_map(g, h, phi) else None
    v = cg.index(cell)
    cg2, tg = _refine(g.adj, _individualize(cg, v))
    for w, c in enumerate(ch):
        if c != cell:
            continue
        ch2, th = _refine(h.adj, _individualize(ch, w))
        if th != tg:
            continue
        phi = _extend(g, h, cg2, ch2)
        if phi is not None:
            return phi
    return None


def invariant(g: Graph) -> tuple:
    """Isomorphism invariant (hashable): size, edge count and refinement trace."""
    _check_cap(g)
    _, trace = _refine(g.adj, [0] * g.n)
    return (g.n, g.num_edges, trace)


def are_isomorphic(g: Graph, h: Graph) -> tuple[bool, list[int] | None]:
    """Return ``(True, phi)`` with ``phi[v]`` the image of ``v``, or ``(False, None)``."""
    _check_cap(g)
    _check_cap(h)
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return False, None
    cg, tg = _refine(g.adj, [0] * g.n)
    ch, th = _refine(h.adj, [0] * h.n)
    if tg != th:
        return False, None
    phi = _extend(g, h, cg, ch)
    return (phi is not None), phi


@dataclass(frozen=True)
class AutomorphismGroup:
    generators: tuple[tuple[int, ...], ...]
    order: int
    base: tuple[int, ...]

    def orbits(self, n: int) -> list[list[int]]:
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gen in self.generators:
            for v, w in enumerate(gen):
                parent[find(v)] = find(w)
        groups: dict[int, list[int]] = {}
        for v in range(n):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())


def _orbit(start: int, gens: list[list[int]]) -> set[int]:
    orbit = {start}
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for gen in gens:
            y = gen[x]
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return orbit


def automorphism_group(g: Graph) -> AutomorphismGroup:
    """Generators and order of Aut(g) via a stabiliser chain.

    At each level the orbit of the first vertex of the target cell under the
    pointwise stabiliser of the base is found by testing every candidate
    image not already reached by generators of that level. The group order is
    the product of those orbit lengths.
    """
    _check_cap(g)
    colors, _ = _refine(g.adj, [0] * g.n)
    order = 1
    gens: list[list[int]] = []
    base: list[int] = []
    while True:
        cell = _target_cell(colors)
        if cell is None:
            break
        v = colors.index(cell)
        fixed_v, tv = _refine(g.adj, _individualize(colors, v))
        level: list[list[int]] = []
        orbit = {v}
        for w, c in enumerate(colors):
            if c != cell or w in orbit:
                continue
            fixed_w, tw = _refine(g.adj, _individualize(colors, w))
            if tw != tv:
                continue
            phi = _extend(g, g, fixed_v, fixed_w)
            if phi is not None:
                level.append(phi)
                orbit = _orbit(v, level)
        order *= len(orbit)
        gens.extend(level)
        base.append(v)
        colors = fixed_v
    assert factorial(g.n) % order == 0
    return AutomorphismGroup(tuple(tuple(p) for p in gens), order, tuple(base))
