"""Gadgetisation of digraphs into 2-featured undirected graphs, and its inverse.

Vertex ``v`` of the digraph becomes a source copy ``s_v = 3v`` with feature
(1, 0), a sink copy ``t_v = 3v + 1`` with feature (0, 1) and an identity vertex
``iota_v = 3v + 2`` with feature (0, 0). Every digraph edge ``(v, u)`` becomes
the undirected gadget edge ``{s_v, t_u}``; identity edges join ``s_v`` and
``t_v`` to ``iota_v``.
"""
from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from acr_workbench.errors import DimensionMismatchError, InvalidParameterError, NotAGadgetisationError
from acr_workbench.graphs.core import FeaturedGraph, GraphMode
from acr_workbench.graphs.homcount import IDENTITY_FEATURE, SOURCE_FEATURE, TARGET_FEATURE
from acr_workbench.graphs.orders import is_strict_linear_order

BOTH_FEATURE = (1, 1)


def source_vertex(v: int) -> int:
    return 3 * v


def sink_vertex(v: int) -> int:
    return 3 * v + 1


def identity_vertex(v: int) -> int:
    return 3 * v + 2


def gadgetise(graph: FeaturedGraph) -> FeaturedGraph:
    if not graph.directed:
        raise DimensionMismatchError("gadgetise needs a directed graph")
    if graph.d != 0:
        raise DimensionMismatchError("gadgetise needs a graph without features")
    features = []
    for _ in graph.vertices:
        features.extend([SOURCE_FEATURE, TARGET_FEATURE, IDENTITY_FEATURE])
    edges = [(source_vertex(v), sink_vertex(u)) for v, u in graph.edges]
    for v in graph.vertices:
        edges.append((source_vertex(v), identity_vertex(v)))
        edges.append((identity_vertex(v), sink_vertex(v)))
    return FeaturedGraph.create(3 * graph.n, edges, features, d=2, mode=GraphMode.UNDIRECTED)


def gadget_violation(graph: FeaturedGraph) -> Optional[Tuple[str, str]]:
    """First violated clause among psi1..psi4 as ``(clause, detail)``, or ``None``.

    psi1: no vertex carries both features. psi2: edges only join s-t, s-iota
    or t-iota. psi3: every s and t vertex has exactly one iota-neighbour.
    psi4: every iota vertex has exactly one s- and one t-neighbour.
    """

    _require_gadget_shape(graph)
    kinds = graph.features
    for v in graph.vertices:
        if kinds[v] == BOTH_FEATURE:
            return "psi1", f"vertex {v} carries both features"
    allowed = {
        frozenset([SOURCE_FEATURE, TARGET_FEATURE]),
        frozenset([SOURCE_FEATURE, IDENTITY_FEATURE]),
        frozenset([TARGET_FEATURE, IDENTITY_FEATURE]),
    }
    for u, v in graph.sorted_edges():
        if frozenset([kinds[u], kinds[v]]) not in allowed:
            return "psi2", f"edge ({u}, {v}) joins forbidden vertex kinds"
    for v in graph.vertices:
        if kinds[v] in (SOURCE_FEATURE, TARGET_FEATURE):
            count = _count_kind(graph, v, IDENTITY_FEATURE)
            if count != 1:
                return "psi3", f"vertex {v} has {count} identity neighbours"
    for v in graph.vertices:
        if kinds[v] == IDENTITY_FEATURE:
            for kind, label in ((SOURCE_FEATURE, "source"), (TARGET_FEATURE, "sink")):
                count = _count_kind(graph, v, kind)
                if count != 1:
                    return "psi4", f"identity vertex {v} has {count} {label} neighbours"
    return None


def is_gadgetisation(graph: FeaturedGraph) -> bool:
    return gadget_violation(graph) is None


def require_gadgetisation(graph: FeaturedGraph) -> None:
    violation = gadget_violation(graph)
    if violation is not None:
        raise NotAGadgetisationError(*violation)


def degadgetise(graph: FeaturedGraph) -> FeaturedGraph:
    """Recover the underlying digraph; identity vertices are numbered ascending."""

    require_gadgetisation(graph)
    owner: Dict[int, int] = {}
    identities = [v for v in graph.vertices if graph.features[v] == IDENTITY_FEATURE]
    for index, iota in enumerate(identities):
        for w in graph.out_neighbours(iota):
            owner[w] = index
    edges: List[Tuple[int, int]] = []
    for u, v in graph.edges:
        if graph.features[u] == SOURCE_FEATURE and graph.features[v] == TARGET_FEATURE:
            edges.append((owner[u], owner[v]))
    return FeaturedGraph.create(len(identities), edges)


def is_gadget_of_strict_linear_order(graph: FeaturedGraph) -> bool:
    if graph.directed or graph.d != 2:
        return False
    if not is_gadgetisation(graph):
        return False
    return is_strict_linear_order(degadgetise(graph))


def _require_gadget_shape(graph: FeaturedGraph) -> None:
    if graph.directed:
        raise DimensionMismatchError("gadget predicates need an undirected graph")
    if graph.d != 2:
        raise DimensionMismatchError("gadget predicates need feature dimension 2")


def _count_kind(graph: FeaturedGraph, v: int, kind: tuple) -> int:
    return sum(1 for w in graph.out_neighbours(v) if graph.features[w] == kind)


def signed_source(i: int, n: int) -> int:
    """Source copy of the element with signed index ``i`` in ``-n..n``."""

    if not -n <= i <= n:
        raise InvalidParameterError(f"signed index {i} outside [-{n}, {n}]")
    return source_vertex(i + n)


def signed_sink(i: int, n: int) -> int:
    if not -n <= i <= n:
        raise InvalidParameterError(f"signed index {i} outside [-{n}, {n}]")
    return sink_vertex(i + n)


__all__ = [
    "degadgetise",
    "gadget_violation",
    "gadgetise",
    "identity_vertex",
    "is_gadget_of_strict_linear_order",
    "is_gadgetisation",
    "require_gadgetisation",
    "signed_sink",
    "signed_source",
    "sink_vertex",
    "source_vertex",
]
