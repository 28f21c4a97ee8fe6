"""Feature- and edge-preserving isomorphism via networkx VF2 matchers."""
from __future__ import annotations

from typing import Dict, Optional

import networkx as nx
import networkx.algorithms.isomorphism as iso

from acr_workbench.errors import CapExceededError
from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.utils.configuration import DEFAULT_LIMITS

_feature_match = iso.categorical_node_match("feature", None)


def to_networkx(graph: FeaturedGraph) -> nx.Graph:
    """Convert to a networkx graph carrying the feature vector as node data."""

    nx_graph = nx.DiGraph() if graph.directed else nx.Graph()
    for vertex in graph.vertices:
        nx_graph.add_node(vertex, feature=graph.features[vertex])
    nx_graph.add_edges_from(graph.edges)
    return nx_graph


def find_isomorphism(
    first: FeaturedGraph, second: FeaturedGraph, cap: Optional[int] = None
) -> Optional[Dict[int, int]]:
    """Return a vertex bijection ``first -> second`` or ``None``."""

    limit = cap if cap is not None else DEFAULT_LIMITS.isomorphism_vertices
    largest = max(first.n, second.n)
    if largest > limit:
        raise CapExceededError("isomorphism vertex count", largest, limit)
    if (first.mode, first.n, first.d, len(first.edges)) != (
        second.mode, second.n, second.d, len(second.edges)
    ):
        return None
    if sorted(first.features) != sorted(second.features):
        return None
    left, right = to_networkx(first), to_networkx(second)
    matcher_cls = iso.DiGraphMatcher if first.directed else iso.GraphMatcher
    matcher = matcher_cls(left, right, node_match=_feature_match)
    if not matcher.is_isomorphic():
        return None
    return dict(matcher.mapping)


def isomorphic(first: FeaturedGraph, second: FeaturedGraph, cap: Optional[int] = None) -> bool:
    return find_isomorphism(first, second, cap=cap) is not None


__all__ = ["find_isomorphism", "isomorphic", "to_networkx"]
