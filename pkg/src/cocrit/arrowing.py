"""Deciding G -> (K_t, K_{1,k})."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .coloring import UNLIMITED, EdgeColoring, PairParams, SearchBudget, Status, find_critical
from .graph import Graph


class Arrow(str, enum.Enum):
    ARROWS = "Arrows"
    NOT_ARROWS = "NotArrows"
    UNKNOWN = "Unknown"


@dataclass
class ArrowVerdict:
    status: Arrow
    witness: EdgeColoring | None = None
    nodes: int = 0


_FROM_SEARCH = {
    Status.NONE_EXISTS: Arrow.ARROWS,
    Status.FOUND: Arrow.NOT_ARROWS,
    Status.EXHAUSTED: Arrow.UNKNOWN,
}


def arrows(g: Graph, p: PairParams, budget: SearchBudget = UNLIMITED) -> ArrowVerdict:
    """Every red/blue colouring of g has a red K_t or a blue K_{1,k}?

    A NotArrows verdict carries the critical colouring that refutes it;
    Unknown means the budget ran out.
    """
    out = find_critical(g, p, budget)
    return ArrowVerdict(_FROM_SEARCH[out.status], out.witness, out.nodes)


def ramsey_star(t: int, k: int) -> int:
    """r(K_t, K_{1,k}) = (t-1)k + 1 (Chvatal)."""
    if t < 3 or k < 3:
        raise ValueError(f"ramsey_star defined here for t, k >= 3; got t={t}, k={k}")
    return (t - 1) * k + 1
