"""Characteristic formulas of graded bisimulation classes.

``chi`` pins down the ``(L, c)``-type of a pointed graph and ``gamma`` adds
the global class counts capped at ``q``. Both are built once per class and
round from a type assignment, so shared subformulas are shared nodes.

Besides the positive and negative graded conjuncts for every realised
successor class, ``chi`` closes the successor types with
``!<>=1 !(chi_1 | ... | chi_m)`` and ``gamma`` closes the global types with
``!E>=1 !(...)``. Without them a graph realising a type absent from the
origin would still satisfy the formula.
"""
from __future__ import annotations

import logging
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from acr_workbench.bisim.refinement import TypeAssignment, graded_types
from acr_workbench.errors import InvalidParameterError
from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.logic.semantics import satisfying_vertices
from acr_workbench.logic.syntax import (
    And,
    Diamond,
    Formula,
    GlobalExists,
    Not,
    Prop,
    conjunction,
    disjunction,
    to_text,
)
from acr_workbench.models import PropertyFormulaResult

logger = logging.getLogger(__name__)

Example = Tuple[FeaturedGraph, int, bool]


class CharacteristicBuilder:
    """Memoised ``chi`` formulas for every class of one graph."""

    def __init__(self, graph: FeaturedGraph, L: int, c: int) -> None:
        self.graph = graph
        self.c = c
        self.types: TypeAssignment = graded_types([graph], L, c)
        self._cache: Dict[Tuple[int, int], Formula] = {}

    @property
    def depth(self) -> int:
        return self.types.depth

    def chi_of_vertex(self, v: int, round_index: Optional[int] = None) -> Formula:
        k = self.depth if round_index is None else round_index
        return self._chi(k, self.types.label(0, v, k))

    def realised(self, round_index: Optional[int] = None) -> List[int]:
        return sorted(set(self.types.labels_of(0, round_index)))

    def chi_of_class(self, label: int, round_index: Optional[int] = None) -> Formula:
        return self._chi(self.depth if round_index is None else round_index, label)

    def _chi(self, k: int, label: int) -> Formula:
        key = (k, label)
        if key in self._cache:
            return self._cache[key]
        representative = self.types.members(0, label, k)[0]
        if k == 0:
            literals: List[Formula] = []
            for i, bit in enumerate(self.graph.features[representative], start=1):
                literals.append(Prop(i) if bit else Not(Prop(i)))
            formula = conjunction(literals)
        else:
            previous = self._chi(k - 1, self.types.label(0, representative, k - 1))
            counts = Counter(self.types.label(0, u, k - 1) for u in self.graph.adjacency[representative])
            parts: List[Formula] = [previous]
            successors: List[Formula] = []
            for successor_label in sorted(counts):
                body = self._chi(k - 1, successor_label)
                successors.append(body)
                for grade in range(1, self.c + 1):
                    graded = Diamond(grade, body)
                    parts.append(graded if counts[successor_label] >= grade else Not(graded))
            parts.append(Not(Diamond(1, Not(disjunction(successors)))))
            formula = conjunction(parts)
        self._cache[key] = formula
        return formula


def chi_formula(graph: FeaturedGraph, v: int, L: int, c: int) -> Formula:
    if not 0 <= v < graph.n:
        raise InvalidParameterError(f"vertex {v} is out of range for n={graph.n}")
    return CharacteristicBuilder(graph, L, c).chi_of_vertex(v)


def _global_part(builder: CharacteristicBuilder, q: int) -> Formula:
    sizes = builder.types.class_sizes(0)
    parts: List[Formula] = []
    realised: List[Formula] = []
    for label in builder.realised():
        body = builder.chi_of_class(label)
        realised.append(body)
        for grade in range(1, q + 1):
            counted = GlobalExists(grade, body)
            parts.append(counted if sizes[label] >= grade else Not(counted))
    parts.append(Not(GlobalExists(1, Not(disjunction(realised)))))
    return conjunction(parts)


def gamma_formula(graph: FeaturedGraph, v: int, L: int, c: int, q: int) -> Formula:
    """``And(chi, globals)``; the left conjunct is exactly ``chi_formula(graph, v, L, c)``."""

    if q < 1:
        raise InvalidParameterError("gamma needs q >= 1")
    if not 0 <= v < graph.n:
        raise InvalidParameterError(f"vertex {v} is out of range for n={graph.n}")
    builder = CharacteristicBuilder(graph, L, c)
    return And(builder.chi_of_vertex(v), _global_part(builder, q))


def strip_global(gamma: Formula) -> Formula:
    if not isinstance(gamma, And):
        raise InvalidParameterError("not a gamma formula")
    return gamma.left


def property_formula(
    examples: Sequence[Example],
    L: int,
    c: int,
    q: int,
) -> Tuple[Optional[Formula], PropertyFormulaResult]:
    """Disjunction of the gamma formulas of the positive examples.

    Returns ``(None, result)`` with the clashing pair when a negative example
    satisfies one of the disjuncts, i.e. the labelling is not invariant under
    bisimilarity with global counts capped at ``q``.
    """

    disjuncts: List[Formula] = []
    origin: List[int] = []
    for index, (graph, v, label) in enumerate(examples):
        if not label:
            continue
        gamma = gamma_formula(graph, v, L, c, q)
        if gamma not in disjuncts:
            disjuncts.append(gamma)
            origin.append(index)

    for index, (graph, v, label) in enumerate(examples):
        if label:
            continue
        for position, gamma in enumerate(disjuncts):
            if v in satisfying_vertices(gamma, graph):
                detail = (f"negative example {index} satisfies the gamma formula "
                          f"of positive example {origin[position]}")
                logger.info("property formula inconsistent: %s", detail)
                return None, PropertyFormulaResult(
                    consistent=False,
                    disjuncts=len(disjuncts),
                    positive_index=origin[position],
                    negative_index=index,
                    detail=detail,
                )

    positives = sum(1 for _, _, label in examples if label)
    psi = disjunction(disjuncts)
    return psi, PropertyFormulaResult(
        consistent=True,
        formula=to_text(psi),
        disjuncts=len(disjuncts),
        detail=f"{len(disjuncts)} distinct classes among {positives} positive examples",
    )


__all__ = [
    "CharacteristicBuilder",
    "Example",
    "chi_formula",
    "gamma_formula",
    "property_formula",
    "strip_global",
]
