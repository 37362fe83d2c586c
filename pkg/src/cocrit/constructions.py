"""Extremal co-critical constructions, their canonical colourings and edge formulas.

Vertex numbering is fixed so graph6 output is reproducible:

* ``t = 3``: A, B, C, R, then x, y, z.
* ``t in {4, 5}``: A, B_1..B_{t-2}, C_1..C_{t-2}, R, x_1..x_{t-2}, y_1..y_{t-2}.

When ``epsilon = 1`` the isolated vertex of R is the first vertex of the R block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .coloring import EdgeColoring
from .graph import Graph


class ConstructionError(ValueError):
    pass


class UnspecifiedConstantError(ValueError):
    """The additive constant of the lower bound is only known for t = 3."""


def epsilon(k: int, n: int) -> int:
    return 0 if k % 2 == 0 and n % 2 == 0 else 1


def circulant_regular(m: int, d: int) -> Graph:
    """d-regular circulant on m vertices: offsets ±1..±d//2, plus m/2 when d is odd."""
    if d >= m:
        raise ConstructionError(f"degree {d} must be below vertex count {m}")
    if d < 0 or (d * m) % 2:
        raise ConstructionError(f"no {d}-regular graph on {m} vertices (parity)")
    offsets = list(range(1, d // 2 + 1))
    if d % 2:
        offsets.append(m // 2)
    edges = {(min(i, (i + s) % m), max(i, (i + s) % m)) for i in range(m) for s in offsets}
    return Graph.from_edges(m, edges)


def regular_bipartite(parts: int, d: int) -> Graph:
    """Vertices ``0..parts-1`` on one side, ``parts..2*parts-1`` on the other;
    ``b_i ~ c_{(i+j) mod parts}`` for ``j < d``."""
    if d > parts or d < 0:
        raise ConstructionError(f"degree {d} must lie in 0..{parts}")
    return Graph.from_edges(2 * parts, ((i, parts + (i + j) % parts) for i in range(parts) for j in range(d)))


@dataclass(frozen=True)
class ConstructionPlan:
    t: int
    k: int
    n: int
    epsilon: int
    layout: dict[str, tuple[int, int]] = field(hash=False)

    def block(self, name: str) -> range:
        return range(*self.layout[name])

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "k": self.k,
            "n": self.n,
            "epsilon": self.epsilon,
            "layout": {name: list(span) for name, span in self.layout.items()},
        }


def check_regime(t: int, k: int, n: int) -> int:
    """Validate builder parameters and return epsilon."""
    if t not in (3, 4, 5):
        raise ConstructionError(f"constructions exist only for t in {{3,4,5}}, got t={t}")
    if k < 3:
        raise ConstructionError(f"need k >= 3, got k={k}")
    if n < (2 * t - 2) * k + 1:
        raise ConstructionError(f"need n >= (2t-2)k+1 = {(2 * t - 2) * k + 1}, got n={n}")
    eps = epsilon(k, n)
    rest = n - (2 * t - 3) * k - eps
    if rest < k or ((k - 1) * rest) % 2:
        raise ConstructionError(f"regular block on {rest} vertices violates size/parity guard")
    return eps


class _Builder:
    def __init__(self) -> None:
        self.n = 0
        self.layout: dict[str, tuple[int, int]] = {}
        self.red: set[tuple[int, int]] = set()
        self.blue: set[tuple[int, int]] = set()

    def block(self, name: str, size: int) -> list[int]:
        start = self.n
        self.n += size
        self.layout[name] = (start, self.n)
        return list(range(start, self.n))

    def add(self, u: int, v: int, blue: bool) -> None:
        e = (min(u, v), max(u, v))
        if e in self.red or e in self.blue:
            raise AssertionError(f"edge {e} added twice")
        (self.blue if blue else self.red).add(e)

    def clique(self, vs: list[int], blue: bool) -> None:
        for u, v in combinations(vs, 2):
            self.add(u, v, blue)

    def join(self, us: list[int], vs: list[int], blue: bool) -> None:
        for u in us:
            for v in vs:
                self.add(u, v, blue)

    def embed(self, g: Graph, vs: list[int], blue: bool) -> None:
        for u, v in g.edges:
            self.add(vs[u], vs[v], blue)

    def regular_block(self, name: str, size: int, eps: int, d: int) -> list[int]:
        vs = self.block(name, size)
        self.embed(circulant_regular(size - eps, d), vs[eps:], blue=True)
        return vs

    def finish(self, t: int, k: int, eps: int) -> tuple[Graph, EdgeColoring, ConstructionPlan]:
        g = Graph.from_edges(self.n, self.red | self.blue)
        sigma = EdgeColoring.from_red(g, self.red)
        return g, sigma, ConstructionPlan(t, k, self.n, eps, dict(self.layout))


def build_t3(k: int, n: int) -> tuple[Graph, EdgeColoring, ConstructionPlan]:
    """The (K_3, K_{1,k}) graph with its unique critical colouring sigma."""
    eps = check_regime(3, k, n)
    b = _Builder()
    A = b.block("A", k - 1)
    B = b.block("B", k - 1)
    C = b.block("C", k - 1)
    R = b.regular_block("R", n - 3 * k, eps, k - 1)
    (x,) = b.block("x", 1)
    (y,) = b.block("y", 1)
    (z,) = b.block("z", 1)
    b.clique(A, blue=True)
    b.embed(regular_bipartite(k - 1, k - 2), B + C, blue=True)
    b.join(A, B, blue=False)
    G1 = A + B + C + R
    for v in G1:
        b.add(x, v, blue=v in B)
        b.add(y, v, blue=v in A)
    b.add(y, z, blue=False)
    for v in A + C:
        b.add(z, v, blue=v in C)
    assert b.n == n
    return b.finish(3, k, eps)


def build_t45(t: int, k: int, n: int) -> tuple[Graph, EdgeColoring, ConstructionPlan]:
    """The (K_t, K_{1,k}) graph for t in {4, 5} with its canonical colouring sigma."""
    if t not in (4, 5):
        raise ConstructionError(f"build_t45 needs t in {{4,5}}, got {t}")
    eps = check_regime(t, k, n)
    s = t - 2
    b = _Builder()
    A = b.block("A", k)
    Bs = [b.block(f"B{i + 1}", k - 1) for i in range(s)]
    Cs = [b.block(f"C{i + 1}", k - 1) for i in range(s)]
    R = b.regular_block("R", n - (2 * t - 3) * k, eps, k - 1)
    X = [b.block(f"x{i + 1}", 1)[0] for i in range(s)]
    Y = [b.block(f"y{i + 1}", 1)[0] for i in range(s)]
    b.clique(A, blue=True)
    for blk in Bs + Cs:
        b.clique(blk, blue=True)
    for i in range(s):
        b.join(Bs[i], A + Cs[i], blue=False)
        for j in range(i + 1, s):
            b.join(Bs[i], Bs[j], blue=False)
    H = A + [v for blk in Bs + Cs for v in blk]
    notA = [v for blk in Bs + Cs for v in blk]
    for i in range(s):
        for v in H + R:
            b.add(X[i], v, blue=v in Bs[i])
        for v in notA + R:
            b.add(Y[i], v, blue=v in Cs[i])
        for j in range(s):
            if j > i:
                b.add(X[i], X[j], blue=False)
            if j != i:
                b.add(Y[i], X[j], blue=False)
    assert b.n == n
    return b.finish(t, k, eps)


def build(t: int, k: int, n: int) -> tuple[Graph, EdgeColoring, ConstructionPlan]:
    return build_t3(k, n) if t == 3 else build_t45(t, k, n)


@dataclass(frozen=True)
class JParams:
    a: int
    b: int = 0
    c: int = 0

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 0 or self.c < 0:
            raise ConstructionError("need |A| >= 1 and |B|, |C| >= 0")
        if (self.b == 0) != (self.c == 0):
            raise ConstructionError("B and C must be both empty or both non-empty")

    @property
    def order(self) -> int:
        return self.a + self.b + self.c + 2

    def edge_count(self) -> int:
        return 2 * (self.order - 2) + self.b * self.c - self.b - self.c


def build_J(p: JParams) -> Graph:
    """Two hubs y, z over independent sets A, B, C; numbering A, B, C, y, z."""
    A = list(range(p.a))
    B = list(range(p.a, p.a + p.b))
    C = list(range(p.a + p.b, p.a + p.b + p.c))
    y, z = p.order - 2, p.order - 1
    edges = [(u, v) for u in B for v in C]
    edges += [(y, v) for v in A + B]
    edges += [(z, v) for v in A + C]
    return Graph.from_edges(p.order, edges)


def j_params_for_order(n: int) -> list[JParams]:
    """Every JParams (with |B| <= |C|) giving a J graph on n vertices."""
    out = [JParams(n - 2)] if n >= 3 else []
    for b_ in range(1, n):
        for c_ in range(b_, n):
            a = n - 2 - b_ - c_
            if a >= 1:
                out.append(JParams(a, b_, c_))
    return out


def lower_bound_edges(t: int, k: int, n: int) -> Fraction:
    """Edge lower bound for co-critical graphs; the constant is known only for t = 3."""
    if t != 3:
        raise UnspecifiedConstantError(f"additive constant for t={t} is not specified")
    return (2 * t - 4 + Fraction(k - 1, 2)) * n - ((k - 1) ** 2 + 5)


def upper_edge_count(t: int, k: int, n: int) -> int:
    """Closed-form edge count of the construction for (t, k, n)."""
    eps = check_regime(t, k, n)
    slope = 2 * t - 4 + Fraction(k - 1, 2)
    if t == 3:
        const = Fraction(k * k - 3 * k - 3) - Fraction((k - 1) * eps, 2)
    else:
        const = Fraction(k - 1, 2) * ((t * t - t - 2) * k - (t * t + t + eps - 6)) - (t - 2) * (
            k + Fraction(5 * t - 7, 2)
        )
    total = slope * n + const
    if total.denominator != 1:
        raise AssertionError(f"non-integral edge count {total} at {(t, k, n)}")
    return int(total)


def sharp_threeclaw_bound(n: int) -> int:
    return 3 * n - 4
