"""Brute-force Ehrenfeucht-Fraisse games for first-order logic."""
from __future__ import annotations

from typing import Dict, Optional, Sequence, Tuple

from acr_workbench.errors import CapExceededError, InvalidParameterError
from acr_workbench.graphs.core import FeaturedGraph, ensure_compatible
from acr_workbench.utils.configuration import DEFAULT_LIMITS

Position = Tuple[Tuple[int, ...], Tuple[int, ...]]


def is_partial_isomorphism(
    g1: FeaturedGraph,
    tuple1: Sequence[int],
    g2: FeaturedGraph,
    tuple2: Sequence[int],
) -> bool:
    """Pebbled tuples agree on equality, edges in both directions and features."""

    if len(tuple1) != len(tuple2):
        return False
    for i, (a, b) in enumerate(zip(tuple1, tuple2)):
        if g1.features[a] != g2.features[b]:
            return False
        for a2, b2 in zip(tuple1[i:], tuple2[i:]):
            if (a == a2) != (b == b2):
                return False
            if g1.has_edge(a, a2) != g2.has_edge(b, b2) or g1.has_edge(a2, a) != g2.has_edge(b2, b):
                return False
    return True


def ef_equivalent(
    g1: FeaturedGraph,
    tuple1: Sequence[int],
    g2: FeaturedGraph,
    tuple2: Sequence[int],
    q: int,
    vertex_cap: Optional[int] = None,
    round_cap: Optional[int] = None,
) -> bool:
    """Duplicator wins the ``q``-round game starting from the pebbled tuples."""

    ensure_compatible([g1, g2])
    if q < 0:
        raise InvalidParameterError("the number of rounds must be non-negative")
    vertex_limit = DEFAULT_LIMITS.ef_vertices if vertex_cap is None else vertex_cap
    round_limit = DEFAULT_LIMITS.ef_rounds if round_cap is None else round_cap
    if max(g1.n, g2.n) > vertex_limit:
        raise CapExceededError("EF game vertices", max(g1.n, g2.n), vertex_limit)
    if q > round_limit:
        raise CapExceededError("EF game rounds", q, round_limit)
    for graph, pebbles in ((g1, tuple1), (g2, tuple2)):
        for vertex in pebbles:
            if not 0 <= vertex < graph.n:
                raise InvalidParameterError(f"pebbled vertex {vertex} is out of range for n={graph.n}")

    memo: Dict[Tuple[Position, int], bool] = {}

    def duplicator_wins(first: Tuple[int, ...], second: Tuple[int, ...], rounds: int) -> bool:
        key = ((first, second), rounds)
        if key in memo:
            return memo[key]
        result = is_partial_isomorphism(g1, first, g2, second)
        if result and rounds > 0:
            result = all(
                any(duplicator_wins(first + (a,), second + (b,), rounds - 1) for b in g2.vertices)
                for a in g1.vertices
            ) and all(
                any(duplicator_wins(first + (a,), second + (b,), rounds - 1) for a in g1.vertices)
                for b in g2.vertices
            )
        memo[key] = result
        return result

    return duplicator_wins(tuple(tuple1), tuple(tuple2), q)


__all__ = ["ef_equivalent", "is_partial_isomorphism"]
