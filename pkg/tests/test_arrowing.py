from itertools import combinations

import pytest
from hypothesis import given

from conftest import graphs
from cocrit.arrowing import Arrow, arrows, ramsey_star
from cocrit.coloring import PairParams, SearchBudget, brute_force_critical, is_critical
from cocrit.graph import Graph


def all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


@pytest.mark.parametrize("t,k", [(3, 3), (3, 4), (4, 3), (4, 4), (3, 5)])
def test_ramsey_threshold(t, k):
    p = PairParams(t, k)
    r = ramsey_star(t, k)
    assert r == (t - 1) * k + 1
    assert arrows(Graph.complete(r), p).status is Arrow.ARROWS
    v = arrows(Graph.complete(r - 1), p)
    assert v.status is Arrow.NOT_ARROWS
    assert is_critical(Graph.complete(r - 1), v.witness, p)


def test_ramsey_star_domain():
    with pytest.raises(ValueError):
        ramsey_star(2, 3)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_all_small_graphs_against_oracle(n):
    p = PairParams(3, 3)
    for g in all_graphs(n):
        expected = Arrow.NOT_ARROWS if brute_force_critical(g, p) else Arrow.ARROWS
        assert arrows(g, p).status is expected


@pytest.mark.parametrize("p", [PairParams(3, 3), PairParams(3, 4)])
def test_edge_monotonicity_n5(p):
    status = {g: arrows(g, p).status for g in all_graphs(5)}
    for g, s in status.items():
        if s is Arrow.ARROWS:
            for u, v in g.non_edges():
                assert status[g.add_edge(u, v)] is Arrow.ARROWS


@given(graphs(min_n=3, max_n=8))
def test_monotone_under_edge_addition(g):
    p = PairParams(3, 3)
    if arrows(g, p).status is Arrow.ARROWS:
        for u, v in g.non_edges():
            assert arrows(g.add_edge(u, v), p).status is Arrow.ARROWS


@given(graphs(max_n=8))
def test_witness_is_verified(g):
    v = arrows(g, PairParams(3, 3))
    if v.status is Arrow.NOT_ARROWS:
        assert is_critical(g, v.witness, PairParams(3, 3))
    else:
        assert v.witness is None


def test_unknown_on_zero_budget():
    assert arrows(Graph.complete(7), PairParams(3, 3), SearchBudget(node_limit=0)).status is Arrow.UNKNOWN
