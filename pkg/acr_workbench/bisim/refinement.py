"""Graded bisimulation types by colour refinement.

Round 0 colours vertices by their feature vector. Round ``k + 1`` colours
``v`` by its round-``k`` colour together with, for each round-``k`` class
``lam``, the number of out-neighbours in ``lam`` capped at ``c``. Two pointed
graphs are ``(L, c)``-bisimilar iff their points get the same round-``L``
colour: a forth challenge of at most ``c`` distinct successors can be answered
class by class exactly when the capped counts agree.

Refinement always runs on the disjoint union of all graphs involved, so
labels are comparable across graphs.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from acr_workbench.errors import InvalidParameterError
from acr_workbench.graphs.core import FeaturedGraph, ensure_compatible

logger = logging.getLogger(__name__)


def rank_signatures(signatures: Sequence[Hashable]) -> Tuple[int, ...]:
    """Replace each signature by its rank among the sorted distinct signatures."""

    ranking = {signature: rank for rank, signature in enumerate(sorted(set(signatures)))}
    return tuple(ranking[signature] for signature in signatures)


@dataclass(frozen=True)
class TypeAssignment:
    """Per-round class labels of every vertex of every input graph.

    ``rounds[k][offset(g) + v]`` is the round-``k`` label of vertex ``v`` of
    graph ``g``.
    """

    sizes: Tuple[int, ...]
    rounds: Tuple[Tuple[int, ...], ...]
    c: int

    @property
    def depth(self) -> int:
        return len(self.rounds) - 1

    def offset(self, graph_index: int) -> int:
        return sum(self.sizes[:graph_index])

    def _round(self, round_index: Optional[int]) -> Tuple[int, ...]:
        return self.rounds[self.depth if round_index is None else round_index]

    def label(self, graph_index: int, v: int, round_index: Optional[int] = None) -> int:
        if not 0 <= v < self.sizes[graph_index]:
            raise InvalidParameterError(f"vertex {v} is out of range for graph {graph_index}")
        return self._round(round_index)[self.offset(graph_index) + v]

    def labels_of(self, graph_index: int, round_index: Optional[int] = None) -> Tuple[int, ...]:
        start = self.offset(graph_index)
        return self._round(round_index)[start:start + self.sizes[graph_index]]

    def class_sizes(self, graph_index: int, round_index: Optional[int] = None) -> Counter:
        return Counter(self.labels_of(graph_index, round_index))

    def members(self, graph_index: int, label: int, round_index: Optional[int] = None) -> List[int]:
        return [v for v, own in enumerate(self.labels_of(graph_index, round_index)) if own == label]


def graded_types(graphs: Sequence[FeaturedGraph], L: int, c: int) -> TypeAssignment:
    if L < 0:
        raise InvalidParameterError("the number of turns L must be non-negative")
    if c < 1:
        raise InvalidParameterError("the grading bound c must be at least 1")
    if not graphs:
        raise InvalidParameterError("graded_types needs at least one graph")
    ensure_compatible(graphs)
    union = graphs[0]
    for graph in graphs[1:]:
        union = union.disjoint_union(graph)

    current = rank_signatures(union.features)
    rounds = [current]
    for _ in range(L):
        signatures = []
        for v in union.vertices:
            counts = Counter(current[u] for u in union.adjacency[v])
            capped = tuple(sorted((label, min(count, c)) for label, count in counts.items()))
            signatures.append((current[v], capped))
        refined = rank_signatures(signatures)
        if refined == current:
            # stable partition; later rounds repeat it
            rounds.extend([refined] * (L - len(rounds) + 1))
            break
        current = refined
        rounds.append(current)
    logger.debug("graded refinement on %d vertices: %d classes after %d rounds",
                 union.n, len(set(rounds[-1])), L)
    return TypeAssignment(tuple(graph.n for graph in graphs), tuple(rounds), c)


class GlobalKind(str, Enum):
    NONE = "none"
    EXACT = "exact"
    CAPPED = "capped"


@dataclass(frozen=True)
class GlobalMode:
    """How the global class counts of two graphs must relate."""

    kind: GlobalKind = GlobalKind.NONE
    cap: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind is GlobalKind.CAPPED:
            if self.cap is None or self.cap < 1:
                raise InvalidParameterError("capped global counting needs q' >= 1")
        elif self.cap is not None:
            raise InvalidParameterError(f"global mode {self.kind.value} takes no cap")

    @classmethod
    def none(cls) -> "GlobalMode":
        return cls(GlobalKind.NONE)

    @classmethod
    def exact(cls) -> "GlobalMode":
        return cls(GlobalKind.EXACT)

    @classmethod
    def capped(cls, q: int) -> "GlobalMode":
        return cls(GlobalKind.CAPPED, q)

    @classmethod
    def parse(cls, text: str) -> "GlobalMode":
        """``none``, ``exact`` or ``capped:<q>``."""

        name, _, bound = text.partition(":")
        try:
            kind = GlobalKind(name)
        except ValueError:
            raise InvalidParameterError(f"unknown global mode {text!r}") from None
        if kind is GlobalKind.CAPPED:
            try:
                return cls.capped(int(bound))
            except ValueError:
                raise InvalidParameterError(f"capped mode needs an integer bound: {text!r}") from None
        return cls(kind)

    def counts_agree(self, first: Counter, second: Counter) -> bool:
        if self.kind is GlobalKind.NONE:
            return True
        for label in set(first) | set(second):
            a, b = first.get(label, 0), second.get(label, 0)
            if self.kind is GlobalKind.CAPPED:
                a, b = min(a, self.cap), min(b, self.cap)
            if a != b:
                return False
        return True

    def describe(self) -> str:
        return f"capped:{self.cap}" if self.kind is GlobalKind.CAPPED else self.kind.value


def bisimilar(
    g1: FeaturedGraph,
    v1: int,
    g2: FeaturedGraph,
    v2: int,
    L: int,
    c: int,
    mode: GlobalMode = GlobalMode(),
    assignment: Optional[TypeAssignment] = None,
) -> bool:
    """Decide ``G1, v1 ~ G2, v2`` for the graded relation selected by ``mode``.

    A precomputed ``assignment`` over ``[g1, g2]`` may be passed to share
    refinement work across many points.
    """

    types = assignment or graded_types([g1, g2], L, c)
    if types.label(0, v1) != types.label(1, v2):
        return False
    return mode.counts_agree(types.class_sizes(0), types.class_sizes(1))


def canonical_enumeration(graph: FeaturedGraph, v: int, L: int, c: int,
                          assignment: Optional[TypeAssignment] = None) -> Dict[int, int]:
    """Number the members of each round-``L`` class ``1..size``; ``v`` is first in its class."""

    if not 0 <= v < graph.n:
        raise InvalidParameterError(f"vertex {v} is out of range for n={graph.n}")
    types = assignment or graded_types([graph], L, c)
    labels = types.labels_of(0)
    enumeration: Dict[int, int] = {}
    classes: Dict[int, List[int]] = {}
    for u in graph.vertices:
        classes.setdefault(labels[u], []).append(u)
    for label, members in classes.items():
        if label == labels[v]:
            members = [v] + [u for u in members if u != v]
        for position, u in enumerate(members, start=1):
            enumeration[u] = position
    return enumeration


def class_table(assignment: TypeAssignment) -> List[str]:
    """Round-by-round labels, one line per round and graph."""

    lines = []
    for round_index in range(assignment.depth + 1):
        parts = []
        for graph_index in range(len(assignment.sizes)):
            labels = " ".join(str(label) for label in assignment.labels_of(graph_index, round_index))
            parts.append(f"G{graph_index + 1}: {labels}")
        lines.append(f"round {round_index}\t" + "\t".join(parts))
    return lines


__all__ = [
    "GlobalKind",
    "GlobalMode",
    "TypeAssignment",
    "bisimilar",
    "canonical_enumeration",
    "class_table",
    "graded_types",
    "rank_signatures",
]
