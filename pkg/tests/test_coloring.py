from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from cocrit.coloring import (
    Color,
    ColoringError,
    EdgeColoring,
    PairParams,
    SearchBudget,
    Status,
    brute_force_critical,
    count_critical,
    enumerate_critical,
    enumerate_max_red,
    find_critical,
    is_critical,
    max_red_critical,
)
from cocrit.graph import Graph

P33 = PairParams(3, 3)
pairs = st.sampled_from([PairParams(3, 3), PairParams(3, 4), PairParams(4, 3)])


def naive_critical(g: Graph, p: PairParams) -> list[frozenset]:
    """Direct product over colourings, for the smallest graphs only."""
    out = []
    for choice in product((0, 1), repeat=g.num_edges):
        red = frozenset(e for e, c in zip(g.edges, choice) if c)
        c = EdgeColoring(g, red)
        bdeg = c.blue_degrees()
        if max(bdeg, default=0) > p.k - 1:
            continue
        if any(all(e in red for e in combinations(s, 2)) for s in combinations(range(g.n), p.t)):
            continue
        out.append(red)
    return out


def test_pair_params_validation():
    with pytest.raises(ValueError):
        PairParams(2, 3)
    with pytest.raises(ValueError):
        PairParams(3, 2)
    with pytest.raises(ValueError):
        SearchBudget(node_limit=-1)


@given(graphs(max_n=6, max_edges=10), pairs)
def test_brute_force_matches_naive(g, p):
    assert brute_force_critical(g, p) == len(naive_critical(g, p))


@given(graphs(max_n=7, max_edges=14), pairs)
def test_count_matches_brute_force(g, p):
    count, complete, _ = count_critical(g, p)
    assert complete
    assert count == brute_force_critical(g, p)


@given(graphs(max_n=6, max_edges=10), pairs)
def test_enumeration_is_exact_set(g, p):
    en = enumerate_critical(g, p)
    assert en.complete
    got = [c.red for c in en.colorings]
    assert len(got) == len(set(got))
    assert set(got) == set(naive_critical(g, p))
    assert all(is_critical(g, c, p) for c in en.colorings)


@given(graphs(max_n=7, max_edges=14), pairs)
def test_find_agrees_with_count(g, p):
    out = find_critical(g, p)
    count = brute_force_critical(g, p)
    assert out.status is (Status.FOUND if count else Status.NONE_EXISTS)
    if out.witness is not None:
        assert is_critical(g, out.witness, p)


@given(graphs(max_n=6, max_edges=10), pairs)
def test_max_red_is_optimal(g, p):
    best = max((len(r) for r in naive_critical(g, p)), default=None)
    out = max_red_critical(g, p)
    if best is None:
        assert out.status is Status.NONE_EXISTS
        return
    assert out.status is Status.FOUND
    assert len(out.witness.red) == best
    assert is_critical(g, out.witness, p)
    allmax = enumerate_max_red(g, p)
    assert allmax.complete
    assert {c.red for c in allmax.colorings} == {r for r in naive_critical(g, p) if len(r) == best}


@given(graphs(max_n=7, max_edges=14), pairs)
def test_max_red_subgraph_is_saturated(g, p):
    out = max_red_critical(g, p)
    if out.witness is None:
        return
    # no blue edge can be recoloured red without closing a K_t
    for u, v in out.witness.blue:
        flipped = EdgeColoring(g, out.witness.red | {(u, v)})
        assert not is_critical(g, flipped, p)


def test_enumerate_limit_marks_incomplete():
    g = Graph.complete(5)
    full = enumerate_critical(g, P33)
    assert full.complete and len(full.colorings) > 2
    capped = enumerate_critical(g, P33, limit=2)
    assert len(capped.colorings) == 2 and not capped.complete


def test_budget_exhaustion_reports_unknown():
    g = Graph.complete(7)
    assert find_critical(g, P33).status is Status.NONE_EXISTS
    assert find_critical(g, P33, SearchBudget(node_limit=1)).status is Status.EXHAUSTED
    assert find_critical(g, P33, SearchBudget(node_limit=0)).status is Status.EXHAUSTED
    count, complete, _ = count_critical(Graph.complete(6), P33, SearchBudget(node_limit=2))
    assert not complete


def test_empty_and_edgeless():
    for g in (Graph.empty(0), Graph.empty(4)):
        assert count_critical(g, P33)[0] == 1
        assert brute_force_critical(g, P33) == 1


@given(graphs(max_n=7), st.data())
def test_text_roundtrip(g, data):
    red = frozenset(e for e in g.edges if data.draw(st.booleans()))
    c = EdgeColoring.from_red(g, red)
    text = c.to_text()
    lines = text.splitlines()
    assert [tuple(map(int, line.split()[:2])) for line in lines] == list(g.edges)
    assert EdgeColoring.from_text(g, text) == c


def test_coloring_validation():
    g = Graph.path(3)
    with pytest.raises(ColoringError):
        EdgeColoring.from_red(g, [(0, 2)])
    with pytest.raises(ColoringError):
        EdgeColoring.from_assignment(g, {(0, 1): Color.RED})
    with pytest.raises(ColoringError):
        EdgeColoring.from_text(g, "0 1 R\n1 2 X\n")


def test_triangle_counts():
    # 8 colourings of K3, minus the all-red one
    assert count_critical(Graph.complete(3), P33)[0] == 7
