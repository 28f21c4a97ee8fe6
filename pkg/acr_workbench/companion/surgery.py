"""Edge surgery that keeps every vertex bisimilar (with exact global counts) to itself.

All constructions work over one vertex set and rewire out-edges only. Types
are the round-``L`` classes of the graded refinement of the input graph;
"lowest member" always means lowest canonical enumeration value, which puts
the point first in its class and orders the rest by vertex index.
"""
from __future__ import annotations

import logging
from collections import Counter
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from acr_workbench.bisim.ef import ef_equivalent
from acr_workbench.bisim.refinement import GlobalMode, canonical_enumeration, graded_types
from acr_workbench.errors import InvalidParameterError, PreconditionError
from acr_workbench.graphs.core import Edge, FeaturedGraph
from acr_workbench.models import SurgeryReport

logger = logging.getLogger(__name__)

Surgery = Tuple[FeaturedGraph, SurgeryReport]

EF_CHECK_VERTICES = 8
EF_CHECK_ROUNDS = 2


def certify(before: FeaturedGraph, after: FeaturedGraph, L: int, c: int) -> List[bool]:
    """Per vertex ``u``: ``before, u`` and ``after, u`` are bisimilar with exact global counts."""

    if before.n != after.n:
        raise InvalidParameterError("certificates compare graphs over the same vertex set")
    types = graded_types([before, after], L, c)
    if not GlobalMode.exact().counts_agree(types.class_sizes(0), types.class_sizes(1)):
        return [False] * before.n
    return [types.label(0, u) == types.label(1, u) for u in before.vertices]


def _require_vertices(graph: FeaturedGraph, *vertices: int) -> None:
    if not graph.directed:
        raise InvalidParameterError("surgery rewires out-edges and needs a directed graph")
    for vertex in vertices:
        if not 0 <= vertex < graph.n:
            raise InvalidParameterError(f"vertex {vertex} is out of range for n={graph.n}")


def _lower_types(graph: FeaturedGraph, L: int, c: int) -> Tuple[int, ...]:
    """Round ``L - 1`` labels; every vertex shares one label when ``L = 0``."""

    if L == 0:
        return tuple(0 for _ in graph.vertices)
    return graded_types([graph], L - 1, c).labels_of(0)


def free_edge_transfer(graph: FeaturedGraph, v: int, w: int, w_prime: int, L: int, c: int) -> Surgery:
    """Move the edge ``(v, w)`` to ``(v, w')`` for ``w`` and ``w'`` of equal ``(L-1, c)``-type."""

    _require_vertices(graph, v, w, w_prime)
    clauses = []
    if not graph.has_edge(v, w):
        clauses.append(f"({v}, {w}) is not an edge")
    if graph.has_edge(v, w_prime):
        clauses.append(f"({v}, {w_prime}) is already an edge")
    lower = _lower_types(graph, L, c)
    if lower[w] != lower[w_prime]:
        clauses.append(f"{w} and {w_prime} differ in (L-1, c)-type")
    if clauses:
        raise PreconditionError("free_edge_transfer", clauses)
    edges = (set(graph.edges) - {(v, w)}) | {(v, w_prime)}
    result = graph.with_edges(edges)
    report = SurgeryReport(
        operation="free-edge-transfer",
        operations=[f"remove {v}->{w}", f"add {v}->{w_prime}"],
        certificate=certify(graph, result, L, c),
    )
    return result, report


def free_witness(graph: FeaturedGraph, v: int, witnesses: Sequence[int], w_prime: int, L: int, c: int) -> Surgery:
    """Add ``(v, w')`` when ``v`` already reaches ``c`` distinct vertices of the type of ``w'``."""

    _require_vertices(graph, v, w_prime, *witnesses)
    clauses = []
    if len(witnesses) != c:
        clauses.append(f"expected {c} witnesses, got {len(witnesses)}")
    if len(set(witnesses) | {w_prime}) != len(witnesses) + 1:
        clauses.append("witnesses and w' must be pairwise distinct")
    lower = _lower_types(graph, L, c)
    for witness in witnesses:
        if not graph.has_edge(v, witness):
            clauses.append(f"({v}, {witness}) is not an edge")
        if lower[witness] != lower[w_prime]:
            clauses.append(f"{witness} and {w_prime} differ in (L-1, c)-type")
    if graph.has_edge(v, w_prime):
        clauses.append(f"({v}, {w_prime}) is already an edge")
    if clauses:
        raise PreconditionError("free_witness", clauses)
    result = graph.with_edges(set(graph.edges) | {(v, w_prime)})
    report = SurgeryReport(
        operation="free-witness",
        operations=[f"add {v}->{w_prime}"],
        certificate=certify(graph, result, L, c),
    )
    return result, report


class _ClassView:
    """Round-``L`` classes of one graph ordered by a canonical enumeration."""

    def __init__(self, labels: Sequence[int], enumeration: Dict[int, int]) -> None:
        self.labels = labels
        self.enumeration = enumeration
        self.members: Dict[int, List[int]] = {}
        for u in sorted(enumeration, key=lambda vertex: (labels[vertex], enumeration[vertex])):
            self.members.setdefault(labels[u], []).append(u)

    def representatives(self) -> List[int]:
        return sorted(u for u, position in self.enumeration.items() if position == 1)

    def representative_of(self, u: int) -> int:
        return self.members[self.labels[u]][0]

    def counts(self, targets: Iterable[int]) -> Counter:
        return Counter(self.labels[w] for w in targets)


def _view(graph: FeaturedGraph, v: int, L: int, c: int) -> _ClassView:
    _require_vertices(graph, v)
    types = graded_types([graph], L, c)
    return _ClassView(types.labels_of(0), canonical_enumeration(graph, v, L, c, types))


def _rewire(view: _ClassView, counts: Counter, c: int) -> Set[int]:
    targets: Set[int] = set()
    for label, count in counts.items():
        members = view.members.get(label, [])
        targets.update(members if count >= c else members[:count])
    return targets


def _replace_out_edges(edges: Set[Edge], u: int, targets: Iterable[int]) -> Set[Edge]:
    kept = {(a, b) for a, b in edges if a != u}
    return kept | {(u, w) for w in targets}


def _log_changes(log: List[str], u: int, before: Iterable[int], after: Iterable[int]) -> None:
    before_set, after_set = set(before), set(after)
    for w in sorted(before_set - after_set):
        log.append(f"remove {u}->{w}")
    for w in sorted(after_set - before_set):
        log.append(f"add {u}->{w}")


def _good_edges(graph: FeaturedGraph, view: _ClassView, c: int, log: List[str]) -> Set[Edge]:
    edges = set(graph.edges)
    for u in view.representatives():
        original = graph.adjacency[u]
        targets = _rewire(view, view.counts(original), c)
        _log_changes(log, u, original, targets)
        edges = _replace_out_edges(edges, u, targets)
    return edges


def initial_good_graph(graph: FeaturedGraph, v: int, L: int, c: int) -> Surgery:
    """Rewire the out-edges of every class representative onto canonical witnesses.

    Per class ``lam`` a representative with ``m`` successors in ``lam`` keeps
    all of ``lam`` when ``m >= c`` and its ``m`` lowest members otherwise.
    """

    view = _view(graph, v, L, c)
    log: List[str] = []
    result = graph.with_edges(_good_edges(graph, view, c, log))
    report = SurgeryReport(
        operation="initial-good-graph",
        operations=log,
        certificate=certify(graph, result, L, c),
        conditions=check_good_conditions(result, view, c),
    )
    return result, report


def _copy_from_representatives(edges: Set[Edge], graph: FeaturedGraph, view: _ClassView,
                               log: List[str]) -> Set[Edge]:
    out: Dict[int, Set[int]] = {u: set() for u in graph.vertices}
    for a, b in edges:
        out[a].add(b)
    for u in graph.vertices:
        representative = view.representative_of(u)
        if representative == u:
            continue
        targets = out[representative]
        _log_changes(log, u, out[u], targets)
        edges = _replace_out_edges(edges, u, targets)
    return edges


def saturate(graph: FeaturedGraph, v: int, L: int, c: int) -> Surgery:
    """Initial good graph, then every vertex copies the out-edges of its class representative."""

    view = _view(graph, v, L, c)
    log: List[str] = []
    edges = _good_edges(graph, view, c, log)
    edges = _copy_from_representatives(edges, graph, view, log)
    result = graph.with_edges(edges)
    report = SurgeryReport(
        operation="saturate",
        operations=log,
        certificate=certify(graph, result, L, c),
        conditions=check_saturation_conditions(result, view, c),
    )
    logger.debug("saturate: %d rewrites on %d vertices", len(log), graph.n)
    return result, report


def homogenise(
    g1: FeaturedGraph,
    v1: int,
    g2: FeaturedGraph,
    v2: int,
    L: int,
    c: int,
    q_prime: int,
    saturated1: Optional[FeaturedGraph] = None,
) -> Surgery:
    """Companion of ``G2`` whose representatives copy class-wise out-degrees from ``saturate(G1)``.

    A representative ``u2`` takes the successor counts of a same-type vertex
    ``u1`` of the saturated ``G1``: classes reached ``c`` or more times become
    complete, the others are matched exactly with lowest members. The result
    is then saturated.
    """

    _require_vertices(g1, v1)
    _require_vertices(g2, v2)
    clauses = []
    if q_prime < c:
        clauses.append(f"q' = {q_prime} is below c = {c}")
    else:
        joint = graded_types([g1, g2], L, c)
        if joint.label(0, v1) != joint.label(1, v2) or not GlobalMode.capped(q_prime).counts_agree(
                joint.class_sizes(0), joint.class_sizes(1)):
            clauses.append(f"the points are not bisimilar with global counts capped at {q_prime}")
    hat1 = saturated1 if saturated1 is not None else saturate(g1, v1, L, c)[0]
    if saturated1 is not None and hat1 != saturate(g1, v1, L, c)[0]:
        clauses.append("the given companion of G1 is not saturate(G1)")
    if clauses:
        raise PreconditionError("homogenise", clauses)

    joint = graded_types([hat1, g2], L, c)
    labels1, labels2 = joint.labels_of(0), joint.labels_of(1)
    view2 = _ClassView(labels2, canonical_enumeration(g2, v2, L, c))
    log: List[str] = []
    edges = set(g2.edges)
    for u2 in view2.representatives():
        u1 = min(u for u in hat1.vertices if labels1[u] == labels2[u2])
        counts = Counter(labels1[w] for w in hat1.adjacency[u1])
        targets = _rewire(view2, counts, c)
        _log_changes(log, u2, g2.adjacency[u2], targets)
        edges = _replace_out_edges(edges, u2, targets)
    staged = g2.with_edges(edges)
    result, saturation = saturate(staged, v2, L, c)
    log.extend(saturation.operations)

    conditions = {"condition 1": all(saturation.conditions.values())}
    conditions.update(check_homogeneity_conditions(g1, hat1, g2, result, L, c, q_prime))
    agreement = ef_agreement(hat1, v1, result, v2, c, q_prime)
    if agreement is not None:
        conditions["EF agreement"] = agreement
    report = SurgeryReport(
        operation="homogenise",
        operations=log,
        certificate=certify(g2, result, L, c),
        conditions=conditions,
    )
    return result, report


def ef_agreement(
    hat1: FeaturedGraph,
    v1: int,
    hat2: FeaturedGraph,
    v2: int,
    c: int,
    q_prime: int,
) -> Optional[bool]:
    """Duplicator wins the ``q' - c``-round EF game from the pebbled points.

    With the points pebbled, ``q`` rounds leave up to ``q + 1`` pebbles per
    side, so global counts capped at ``q'`` carry ``q' - c`` rounds. Only
    decided for ``c = 1`` on graphs of at most ``EF_CHECK_VERTICES`` vertices,
    with the rounds capped at ``EF_CHECK_ROUNDS``; ``None`` otherwise.
    """

    if c != 1 or max(hat1.n, hat2.n) > EF_CHECK_VERTICES:
        return None
    rounds = min(q_prime - c, EF_CHECK_ROUNDS)
    return ef_equivalent(hat1, (v1,), hat2, (v2,), rounds,
                         vertex_cap=EF_CHECK_VERTICES, round_cap=EF_CHECK_ROUNDS)


def check_good_conditions(result: FeaturedGraph, view: _ClassView, c: int) -> Dict[str, bool]:
    """Lower-closure and completion of representative out-edges."""

    lower_closed = True
    complete = True
    for u in view.representatives():
        for w in result.adjacency[u]:
            members = view.members[view.labels[w]]
            position = view.enumeration[w]
            if not all(result.has_edge(u, x) for x in members[:position - 1]):
                lower_closed = False
            if position >= c and not all(result.has_edge(u, x) for x in members):
                complete = False
    return {"condition 2": lower_closed, "condition 3": complete}


def check_saturation_conditions(result: FeaturedGraph, view: _ClassView, c: int) -> Dict[str, bool]:
    uniform = all(
        set(result.adjacency[u]) == set(result.adjacency[view.representative_of(u)])
        for u in result.vertices
    )
    lower_closed = True
    complete = True
    for u in result.vertices:
        for w in result.adjacency[u]:
            members = view.members[view.labels[w]]
            position = view.enumeration[w]
            if not all(result.has_edge(u, x) for x in members[:position - 1]):
                lower_closed = False
            if position >= c and not all(result.has_edge(u, x) for x in members):
                complete = False
    return {"condition 2": uniform, "condition 3": lower_closed, "condition 4": complete}


def check_homogeneity_conditions(
    g1: FeaturedGraph,
    hat1: FeaturedGraph,
    g2: FeaturedGraph,
    hat2: FeaturedGraph,
    L: int,
    c: int,
    q_prime: int,
) -> Dict[str, bool]:
    capped = GlobalMode.capped(q_prime)
    before = graded_types([g1, g2], L, c)
    after = graded_types([hat1, hat2], L, c)
    global_before = capped.counts_agree(before.class_sizes(0), before.class_sizes(1))
    global_after = capped.counts_agree(after.class_sizes(0), after.class_sizes(1))
    preserved = all(
        (global_before and before.label(0, u1) == before.label(1, u2))
        == (global_after and after.label(0, u1) == after.label(1, u2))
        for u1 in g1.vertices for u2 in g2.vertices
    )
    labels1, labels2 = after.labels_of(0), after.labels_of(1)
    sizes2 = after.class_sizes(1)
    matched_below = True
    complete_above = True
    for u1 in hat1.vertices:
        counts1 = Counter(labels1[w] for w in hat1.adjacency[u1])
        for u2 in hat2.vertices:
            if labels1[u1] != labels2[u2]:
                continue
            counts2 = Counter(labels2[w] for w in hat2.adjacency[u2])
            for label in set(counts1) | set(counts2):
                if counts1[label] < c:
                    matched_below &= counts1[label] == counts2[label]
                else:
                    complete_above &= counts2[label] == sizes2[label]
    return {"condition 2": preserved, "condition 3": matched_below, "condition 4": complete_above}


__all__ = [
    "Surgery",
    "certify",
    "check_good_conditions",
    "check_homogeneity_conditions",
    "check_saturation_conditions",
    "ef_agreement",
    "free_edge_transfer",
    "free_witness",
    "homogenise",
    "initial_good_graph",
    "saturate",
]
