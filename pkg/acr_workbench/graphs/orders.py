"""Ground-truth predicates on directed graphs."""
from __future__ import annotations

from math import comb
from typing import Dict

from acr_workbench.errors import DimensionMismatchError
from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.graphs.homcount import count_p2


def _require_directed(graph: FeaturedGraph, operation: str) -> None:
    if not graph.directed:
        raise DimensionMismatchError(f"{operation} needs a directed graph")


def is_strict_linear_order(graph: FeaturedGraph) -> bool:
    """Irreflexive, total on distinct pairs, and transitive."""

    _require_directed(graph, "is_strict_linear_order")
    edges = graph.edges
    for x in graph.vertices:
        if (x, x) in edges:
            return False
    for x in graph.vertices:
        for y in range(x + 1, graph.n):
            if (x, y) not in edges and (y, x) not in edges:
                return False
    for x, y in edges:
        for z in graph.out_neighbours(y):
            if (x, z) not in edges:
                return False
    return True


def characterization_holds(graph: FeaturedGraph) -> bool:
    """``|E| = C(n, 2)`` and ``hom(P2, G) = C(n, 3)``."""

    _require_directed(graph, "characterization_holds")
    return len(graph.edges) == comb(graph.n, 2) and count_p2(graph) == comb(graph.n, 3)


def order_counts(graph: FeaturedGraph) -> Dict[str, int]:
    """The four quantities compared by the characterisation."""

    _require_directed(graph, "order_counts")
    return {
        "edges": len(graph.edges),
        "binomial_n_2": comb(graph.n, 2),
        "hom_p2": count_p2(graph),
        "binomial_n_3": comb(graph.n, 3),
    }


def max_out_degree(graph: FeaturedGraph) -> int:
    return max(len(neighbours) for neighbours in graph.adjacency)


__all__ = [
    "characterization_holds",
    "is_strict_linear_order",
    "max_out_degree",
    "order_counts",
]
