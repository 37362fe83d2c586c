from itertools import combinations

import pytest
from hypothesis import given

from conftest import graphs
from cocrit.arrowing import Arrow
from cocrit.coloring import PairParams, SearchBudget, brute_force_critical, find_critical
from cocrit.cocritical import (
    SCHEMA,
    BoundViolation,
    Verdict,
    audit_coloring,
    audit_structure,
    check_edge_bounds,
    hajnal_dichotomy,
    is_Kt_saturated,
    verify_cocritical,
)
from cocrit.graph import Graph
from cocrit.graph6 import parse_graph6

P33 = PairParams(3, 3)


def oracle_cocritical(g: Graph, p: PairParams) -> bool:
    if g.is_complete() or brute_force_critical(g, p) == 0:
        return False
    return all(brute_force_critical(g.add_edge(u, v), p) == 0 for u, v in g.non_edges())


def brute_saturated(g: Graph, t: int) -> bool:
    def has_kt(h):
        return any(all(h.has_edge(a, b) for a, b in combinations(s, 2)) for s in combinations(range(h.n), t))

    return not has_kt(g) and all(has_kt(g.add_edge(u, v)) for u, v in g.non_edges())


@given(graphs(min_n=2, max_n=7))
def test_saturation_matches_brute_force(g):
    for t in (3, 4):
        assert is_Kt_saturated(g, t) == brute_saturated(g, t)
        if is_Kt_saturated(g, t) and g.n >= t:
            assert hajnal_dichotomy(g, t)


@pytest.mark.parametrize("g6", ["Fw~~w", "Fr~~w"])
def test_small_cocritical_against_oracle(g6):
    g = parse_graph6(g6)
    assert oracle_cocritical(g, P33)
    rep = verify_cocritical(g, P33)
    assert rep.verdict is Verdict.COCRITICAL


@given(graphs(min_n=7, max_n=7))
def test_verdict_matches_oracle(g):
    # keep the numpy oracle small: each augmentation has at most 17 edges
    if g.num_edges > 16:
        return
    rep = verify_cocritical(g, P33)
    assert (rep.verdict is Verdict.COCRITICAL) == oracle_cocritical(g, P33)
    assert rep.verdict is not Verdict.UNVERIFIED


def test_near_misses_are_refuted():
    g = parse_graph6("Fw~~w")
    for u, v in g.edges:
        h = g.remove_edge(u, v)
        rep = verify_cocritical(h, P33)
        assert rep.verdict is Verdict.NOT_COCRITICAL
        assert rep.verdict is (Verdict.COCRITICAL if oracle_cocritical(h, P33) else Verdict.NOT_COCRITICAL)


def test_complete_and_arrowing_graphs():
    assert verify_cocritical(Graph.complete(6), P33).verdict is Verdict.NOT_COCRITICAL
    rep = verify_cocritical(Graph.complete(7).remove_edge(0, 1), P33)
    assert rep.verdict is Verdict.NOT_COCRITICAL
    assert rep.base.status is Arrow.ARROWS


def test_sharp_construction(sharp_t3):
    g, sigma, _ = sharp_t3
    rep = verify_cocritical(g, P33)
    assert rep.verdict is Verdict.COCRITICAL
    assert len(rep.nonedges) == 43
    assert all(r.status is Arrow.ARROWS for r in rep.nonedges)
    doc = rep.to_json()
    assert doc["schema"] == SCHEMA and doc["edges"] == 35
    au = audit_structure(g, P33)
    assert au.complete and au.passed
    assert audit_coloring(g, sigma, P33).passed


def test_budget_gives_unverified(sharp_t3):
    g = sharp_t3[0]
    rep = verify_cocritical(g, P33, SearchBudget(node_limit=0))
    assert rep.verdict is Verdict.UNVERIFIED


def test_jobs_agree(sharp_t3):
    g = sharp_t3[0]
    one = verify_cocritical(g, P33).to_json()
    two = verify_cocritical(g, P33, jobs=2).to_json()
    assert one == two


def test_fail_fast_stops_early():
    g = Graph.cycle(7)
    assert find_critical(g, P33).witness is not None
    rep = verify_cocritical(g, P33, fail_fast=True)
    assert rep.verdict is Verdict.NOT_COCRITICAL
    assert len(rep.nonedges) == 1


def test_bound_guard():
    with pytest.raises(BoundViolation):
        check_edge_bounds(Graph.path(13), P33)
    with pytest.raises(BoundViolation):
        check_edge_bounds(Graph.complete(6), P33)
    # exactly at 3n-4 is fine
    check_edge_bounds(Graph.from_edges(13, list(combinations(range(13), 2))[:35]), P33)


def test_all_optima_audit():
    g = parse_graph6("Fw~~w")
    audits = audit_structure(g, P33, all_optima=True)
    assert audits and all(a.complete for a in audits)
    reds = {a.red_edges for a in audits}
    assert len(reds) == 1


def test_incomplete_audit_is_not_passed(sharp_t3):
    au = audit_structure(sharp_t3[0], P33, SearchBudget(node_limit=0))
    assert not au.complete and not au.passed
