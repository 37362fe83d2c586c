"""Co-criticality verification and structural audits of critical colourings."""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arrowing import Arrow, ArrowVerdict, arrows, ramsey_star
from .coloring import (
    UNLIMITED,
    EdgeColoring,
    PairParams,
    SearchBudget,
    Status,
    enumerate_max_red,
    max_red_critical,
)
from .constructions import lower_bound_edges
from .graph import (
    Graph,
    clique_number,
    count_triangles_on_edge,
    has_clique,
    is_2connected,
    mask_of,
)

SCHEMA = "cocritical-report/1"


class BoundViolation(AssertionError):
    """A certified co-critical graph contradicts a proven edge lower bound."""


def is_Kt_saturated(g: Graph, t: int) -> bool:
    """K_t-free, and adding any missing edge creates a K_t."""
    if t < 3:
        raise ValueError("saturation is checked for t >= 3")
    if has_clique(g.adj, t, g.vertex_mask):
        return False
    return all(has_clique(g.adj, t - 2, g.adj[u] & g.adj[v]) for u, v in g.non_edges())


def hajnal_dichotomy(g: Graph, t: int) -> bool:
    """Universal vertex, or minimum degree at least 2(t-2)."""
    return g.max_degree() == g.n - 1 or g.min_degree() >= 2 * (t - 2)


class Verdict(str, enum.Enum):
    COCRITICAL = "CoCritical"
    NOT_COCRITICAL = "NotCoCritical"
    UNVERIFIED = "Unverified"


@dataclass
class NonEdgeResult:
    u: int
    v: int
    status: Arrow
    nodes: int

    def to_json(self) -> dict:
        return {"u": self.u, "v": self.v, "status": self.status.value, "nodes": self.nodes}


@dataclass
class CocriticalReport:
    params: PairParams
    graph: Graph
    verdict: Verdict
    reason: str = ""
    base: ArrowVerdict | None = None
    nonedges: list[NonEdgeResult] = field(default_factory=list)

    @property
    def base_has_critical(self) -> bool:
        return self.base is not None and self.base.status is Arrow.NOT_ARROWS

    @property
    def witness(self) -> EdgeColoring | None:
        return self.base.witness if self.base else None

    @property
    def unknown_edges(self) -> list[tuple[int, int]]:
        return [(r.u, r.v) for r in self.nonedges if r.status is Arrow.UNKNOWN]

    @property
    def nodes(self) -> int:
        return (self.base.nodes if self.base else 0) + sum(r.nodes for r in self.nonedges)

    def to_json(self) -> dict:
        from .graph6 import emit_graph6

        w = self.witness
        return {
            "schema": SCHEMA,
            "t": self.params.t,
            "k": self.params.k,
            "graph6": emit_graph6(self.graph),
            "n": self.graph.n,
            "edges": self.graph.num_edges,
            "verdict": self.verdict.value,
            "reason": self.reason,
            "unknown_edges": [list(e) for e in self.unknown_edges],
            "witness_coloring": coloring_json(w) if w else None,
            "nonedges": [r.to_json() for r in self.nonedges],
        }


def coloring_json(c: EdgeColoring) -> list[list]:
    return [[u, v, c.color(u, v).value] for u, v in c.graph.edges]


def _check_nonedge(args: tuple[Graph, PairParams, SearchBudget, int, int]) -> NonEdgeResult:
    g, p, budget, u, v = args
    verdict = arrows(g.add_edge(u, v), p, budget)
    return NonEdgeResult(u, v, verdict.status, verdict.nodes)


def check_edge_bounds(g: Graph, p: PairParams) -> None:
    """Raise BoundViolation if a co-critical g breaks a known lower bound."""
    if g.n < ramsey_star(p.t, p.k):
        raise BoundViolation(f"co-critical graph on {g.n} < r(K_t,K_1,k) vertices")
    if p.t == 3:
        if g.num_edges < lower_bound_edges(3, p.k, g.n):
            raise BoundViolation(f"e={g.num_edges} below (2+(k-1)/2)n-(k-1)^2-5 at n={g.n}, k={p.k}")
        if p.k == 3 and g.n >= 13 and g.num_edges < 3 * g.n - 4:
            raise BoundViolation(f"e={g.num_edges} below 3n-4 at n={g.n}")


def verify_cocritical(
    g: Graph,
    p: PairParams,
    budget: SearchBudget = UNLIMITED,
    *,
    jobs: int = 1,
    fail_fast: bool = False,
) -> CocriticalReport:
    """Check that g has a critical colouring but no augmentation g+e does.

    ``budget`` applies to each search separately. Non-edges whose search runs
    out of budget are listed as unknown instead of failing the verdict. With
    ``fail_fast`` the scan stops at the first refuting non-edge.
    """
    if g.is_complete():
        return CocriticalReport(p, g, Verdict.NOT_COCRITICAL, "complete graph")
    base = arrows(g, p, budget)
    report = CocriticalReport(p, g, Verdict.UNVERIFIED, base=base)
    if base.status is Arrow.ARROWS:
        report.verdict = Verdict.NOT_COCRITICAL
        report.reason = "graph arrows: no critical colouring"
        return report
    if base.status is Arrow.UNKNOWN:
        report.reason = "base search exhausted its budget"
        return report

    tasks = [(g, p, budget, u, v) for u, v in g.non_edges()]
    if jobs > 1 and not fail_fast:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            report.nonedges = list(pool.map(_check_nonedge, tasks, chunksize=4))
    else:
        for task in tasks:
            res = _check_nonedge(task)
            report.nonedges.append(res)
            if fail_fast and res.status is Arrow.NOT_ARROWS:
                break

    refuted = [r for r in report.nonedges if r.status is Arrow.NOT_ARROWS]
    if refuted:
        report.verdict = Verdict.NOT_COCRITICAL
        report.reason = f"adding {refuted[0].u}-{refuted[0].v} still admits a critical colouring"
    elif report.unknown_edges:
        report.reason = f"{len(report.unknown_edges)} non-edge searches exhausted"
    else:
        report.verdict = Verdict.COCRITICAL
        check_edge_bounds(g, p)
    return report


# --- structural audit ------------------------------------------------------


@dataclass
class LemmaAudit:
    """Structural quantities of a (maximum-red) critical colouring.

    Fields stay None when the search ran out of budget or the item does not
    apply (the t = 3 extras for larger t).
    """

    t: int
    k: int
    n: int
    coloring: EdgeColoring | None = None
    red_edges: int | None = None
    S: tuple[int, ...] | None = None
    s_is_clique: bool | None = None
    alpha_blue_S: int | None = None
    delta_red: int | None = None
    Delta_red: int | None = None
    red_saturated: bool | None = None
    red_2connected: bool | None = None
    max_triangles_per_red_edge: int | None = None
    hajnal_ok: bool | None = None

    def checks(self) -> dict[str, bool | None]:
        t, k, n = self.t, self.k, self.n

        def cmp(x, ok):
            return None if x is None else ok(x)

        out = {
            "S_is_clique": self.s_is_clique,
            "alpha_blue_S<=t-1": cmp(self.alpha_blue_S, lambda a: a <= t - 1),
            "|S|<=(t-1)(k-1)": cmp(self.S, lambda s: len(s) <= (t - 1) * (k - 1)),
            "Delta_red<=n-2": cmp(self.Delta_red, lambda d: d <= n - 2),
            "delta_red>=2(t-2)": cmp(self.delta_red, lambda d: d >= 2 * (t - 2)),
            "red_saturated": self.red_saturated,
            "hajnal": self.hajnal_ok,
        }
        if t == 3:
            out["red_2connected"] = self.red_2connected
            out["Delta_red<=n-3"] = cmp(self.Delta_red, lambda d: d <= n - 3)
            out["triangles_per_red_edge<=2k-2"] = cmp(self.max_triangles_per_red_edge, lambda m: m <= 2 * k - 2)
        return out

    @property
    def complete(self) -> bool:
        return self.coloring is not None

    @property
    def passed(self) -> bool:
        return self.complete and all(v is True for v in self.checks().values())

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "k": self.k,
            "n": self.n,
            "complete": self.complete,
            "red_edges": self.red_edges,
            "S": list(self.S) if self.S is not None else None,
            "s_is_clique": self.s_is_clique,
            "alpha_blue_S": self.alpha_blue_S,
            "delta_red": self.delta_red,
            "Delta_red": self.Delta_red,
            "red_saturated": self.red_saturated,
            "red_2connected": self.red_2connected,
            "max_triangles_per_red_edge": self.max_triangles_per_red_edge,
            "hajnal_ok": self.hajnal_ok,
            "checks": self.checks(),
            "passed": self.passed,
            "coloring": coloring_json(self.coloring) if self.coloring else None,
        }


def audit_coloring(g: Graph, c: EdgeColoring, p: PairParams) -> LemmaAudit:
    """Compute every audit field from the graph and a colouring alone."""
    t, k = p.t, p.k
    red = c.red_graph()
    blue = c.blue_graph()
    bdeg = blue.degrees()
    S = tuple(v for v in range(g.n) if bdeg[v] <= k - 2)
    smask = mask_of(S)
    s_clique = all((g.adj[v] | (1 << v)) & smask == smask for v in S)
    blue_comp = blue.complement()
    audit = LemmaAudit(t, k, g.n, coloring=c, red_edges=len(c.red), S=S)
    audit.s_is_clique = s_clique
    audit.alpha_blue_S = clique_number(blue_comp.adj, smask)
    audit.delta_red = red.min_degree()
    audit.Delta_red = red.max_degree()
    audit.red_saturated = is_Kt_saturated(red, t)
    audit.hajnal_ok = hajnal_dichotomy(red, t)
    if t == 3:
        audit.red_2connected = is_2connected(red)
        audit.max_triangles_per_red_edge = max(
            (count_triangles_on_edge(g, u, v) for u, v in sorted(c.red)), default=0
        )
    return audit


def audit_structure(
    g: Graph, p: PairParams, budget: SearchBudget = UNLIMITED, *, all_optima: bool = False
) -> LemmaAudit | list[LemmaAudit]:
    """Audit the maximum-red critical colouring of g.

    With ``all_optima`` every maximum-red colouring is audited and a list is
    returned. On budget exhaustion the fields stay unknown.
    """
    if all_optima:
        en = enumerate_max_red(g, p, budget)
        if not en.complete:
            return [LemmaAudit(p.t, p.k, g.n)]
        return [audit_coloring(g, c, p) for c in en.colorings]
    out = max_red_critical(g, p, budget)
    if out.status is not Status.FOUND:
        return LemmaAudit(p.t, p.k, g.n)
    return audit_coloring(g, out.witness, p)
