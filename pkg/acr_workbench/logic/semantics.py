"""Satisfaction of GML∃ formulas on featured graphs."""
from __future__ import annotations

from typing import Dict, FrozenSet, Optional

from acr_workbench.errors import DimensionMismatchError, InvalidParameterError
from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.logic.syntax import (
    TOP,
    And,
    Diamond,
    Formula,
    GlobalExists,
    Not,
    Prop,
    Top,
    subformulas,
)

TruthTable = Dict[Formula, FrozenSet[int]]


def satisfying_vertices(
    formula: Formula, graph: FeaturedGraph, table: Optional[TruthTable] = None
) -> FrozenSet[int]:
    """All vertices where ``formula`` holds.

    Subformulas are evaluated once each, bottom-up; pass ``table`` to share
    results between several formulas over the same graph.
    """

    memo: TruthTable = table if table is not None else {}
    everything = frozenset(graph.vertices)
    for node in subformulas(formula):
        if node in memo:
            continue
        if isinstance(node, Top):
            result = everything
        elif isinstance(node, Prop):
            if node.index > graph.d:
                raise DimensionMismatchError(
                    f"proposition p{node.index} needs feature dimension >= {node.index}, graph has {graph.d}")
            result = frozenset(v for v in graph.vertices if graph.features[v][node.index - 1])
        elif isinstance(node, Not):
            result = everything - memo[node.body]
        elif isinstance(node, And):
            result = memo[node.left] & memo[node.right]
        elif isinstance(node, Diamond):
            body = memo[node.body]
            result = frozenset(
                v for v in graph.vertices
                if _at_least(graph.adjacency[v], body, node.grade)
            )
        elif isinstance(node, GlobalExists):
            result = everything if len(memo[node.body]) >= node.grade else frozenset()
        else:
            raise TypeError(f"unknown formula node {node!r}")
        memo[node] = result
    return memo[formula]


def evaluate(formula: Formula, graph: FeaturedGraph, v: int) -> bool:
    if not 0 <= v < graph.n:
        raise InvalidParameterError(f"vertex {v} is out of range for n={graph.n}")
    return v in satisfying_vertices(formula, graph)


def build_degree_bound_formula(c: int) -> Formula:
    """``!E>=1 <>=(c+1) T``: no vertex has more than ``c`` out-neighbours."""

    if c < 0:
        raise InvalidParameterError("degree bound must be non-negative")
    return Not(GlobalExists(1, Diamond(c + 1, TOP)))


def _at_least(neighbours, members: FrozenSet[int], grade: int) -> bool:
    count = 0
    for u in neighbours:
        if u in members:
            count += 1
            if count >= grade:
                return True
    return False


__all__ = [
    "TruthTable",
    "build_degree_bound_formula",
    "evaluate",
    "satisfying_vertices",
]
