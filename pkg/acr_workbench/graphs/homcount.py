"""Feature-preserving homomorphism counts with closed forms for the path P2."""
from __future__ import annotations

import logging
from collections import deque
from typing import Dict, List, Optional

from acr_workbench.errors import CapExceededError, DimensionMismatchError
from acr_workbench.graphs.core import FeaturedGraph, ensure_compatible
from acr_workbench.utils.configuration import DEFAULT_LIMITS

logger = logging.getLogger(__name__)

SOURCE_FEATURE = (1, 0)
TARGET_FEATURE = (0, 1)
IDENTITY_FEATURE = (0, 0)


def make_p2() -> FeaturedGraph:
    """The directed path 0 -> 1 -> 2."""

    return FeaturedGraph.create(3, [(0, 1), (1, 2)])


def count_homomorphisms(
    pattern: FeaturedGraph,
    target: FeaturedGraph,
    pattern_cap: Optional[int] = None,
    target_cap: Optional[int] = None,
) -> int:
    """Count maps preserving edges and feature vectors (not necessarily injective)."""

    ensure_compatible([pattern, target])
    p_cap = pattern_cap if pattern_cap is not None else DEFAULT_LIMITS.hom_pattern_vertices
    t_cap = target_cap if target_cap is not None else DEFAULT_LIMITS.hom_target_vertices
    if pattern.n > p_cap:
        raise CapExceededError("pattern vertex count", pattern.n, p_cap)
    if target.n > t_cap:
        raise CapExceededError("target vertex count", target.n, t_cap)

    order = _traversal_order(pattern)
    by_feature: Dict[tuple, List[int]] = {}
    for vertex in target.vertices:
        by_feature.setdefault(target.features[vertex], []).append(vertex)
    position = {vertex: index for index, vertex in enumerate(order)}
    mapping: Dict[int, int] = {}

    def candidates(x: int) -> List[int]:
        pool = by_feature.get(pattern.features[x], [])
        allowed = set(pool)
        for p in pattern.in_neighbours(x):
            if p != x and position[p] < position[x]:
                allowed &= set(target.out_neighbours(mapping[p]))
        for p in pattern.out_neighbours(x):
            if p != x and position[p] < position[x]:
                allowed &= set(target.in_neighbours(mapping[p]))
        if pattern.has_edge(x, x):
            allowed = {y for y in allowed if target.has_edge(y, y)}
        return sorted(allowed)

    def extend(index: int) -> int:
        if index == len(order):
            return 1
        x = order[index]
        total = 0
        for y in candidates(x):
            mapping[x] = y
            total += extend(index + 1)
        mapping.pop(x, None)
        return total

    return extend(0)


def count_p2(graph: FeaturedGraph) -> int:
    """Number of homomorphisms of the directed path P2: sum of in*out degrees."""

    if not graph.directed:
        raise DimensionMismatchError("count_p2 needs a directed graph")
    return sum(graph.in_degree(v) * graph.out_degree(v) for v in graph.vertices)


def count_gadget_p2(gadget: FeaturedGraph) -> int:
    """P2 count of the underlying digraph, read off a gadgetisation.

    Every identity vertex joins the source and sink copies of one underlying
    vertex u; the paths through u number (gadget edges at the sink copy) *
    (gadget edges at the source copy).
    """

    from acr_workbench.graphs.gadgets import require_gadgetisation

    require_gadgetisation(gadget)
    total = 0
    for vertex in gadget.vertices:
        if gadget.features[vertex] != IDENTITY_FEATURE:
            continue
        source = _neighbour_with(gadget, vertex, SOURCE_FEATURE)
        sink = _neighbour_with(gadget, vertex, TARGET_FEATURE)
        out_degree = sum(1 for w in gadget.out_neighbours(source)
                         if gadget.features[w] == TARGET_FEATURE)
        in_degree = sum(1 for w in gadget.out_neighbours(sink)
                        if gadget.features[w] == SOURCE_FEATURE)
        total += in_degree * out_degree
    return total


def _neighbour_with(graph: FeaturedGraph, vertex: int, feature: tuple) -> int:
    for w in graph.out_neighbours(vertex):
        if graph.features[w] == feature:
            return w
    raise DimensionMismatchError(f"vertex {vertex} has no neighbour with feature {feature}")


def _traversal_order(pattern: FeaturedGraph) -> List[int]:
    """Breadth-first order over the underlying undirected pattern, component by component."""

    seen = set()
    order: List[int] = []
    for root in pattern.vertices:
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(set(pattern.out_neighbours(x)) | set(pattern.in_neighbours(x))):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return order


__all__ = [
    "IDENTITY_FEATURE",
    "SOURCE_FEATURE",
    "TARGET_FEATURE",
    "count_gadget_p2",
    "count_homomorphisms",
    "count_p2",
    "make_p2",
]
