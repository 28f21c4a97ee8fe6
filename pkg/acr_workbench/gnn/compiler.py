"""Compile GML∃ classifiers into ACR-GNNs with bounded aggregation.

Each distinct subformula owns one embedding dimension holding its truth
value in {0, 1}. With ``clamp(z) = min(1, max(0, z))``:

* ``p_i``       copies itself (set from the input by the first layer)
* ``T``         bias 1
* ``!f``        clamp(1 - x_f)
* ``f & g``     clamp(x_f + x_g - 1)
* ``<>=k f``    clamp(agg_f - (k - 1))
* ``E>=k f``    clamp(read_f - (k - 1))

The aggregation is the sum of the k-restricted neighbour multiset, with k
the largest modal grading. For 0/1 values, ``sum_v min(mult_v, k) >= j``
holds iff at least ``j`` neighbours carry a 1, for every ``j <= k``: if some
vector with a 1 occurs ``k`` or more times both sides are true, otherwise
nothing was capped. Readout is an unbounded sum.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from acr_workbench.errors import InvalidParameterError
from acr_workbench.gnn.network import (
    AcrGnn,
    Activation,
    AggregationSpec,
    Classifier,
    Layer,
    Rational,
)
from acr_workbench.logic.syntax import (
    And,
    Diamond,
    Formula,
    GlobalExists,
    Not,
    Prop,
    Top,
    stats,
    subformulas,
    to_text,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubformulaTable:
    formulas: Tuple[Formula, ...]
    index: Dict[Formula, int] = field(compare=False, repr=False)

    @classmethod
    def of(cls, formula: Formula) -> "SubformulaTable":
        ordered = tuple(subformulas(formula))
        return cls(ordered, {node: position for position, node in enumerate(ordered)})

    def dim(self, formula: Formula) -> int:
        return self.index[formula]

    def __len__(self) -> int:
        return len(self.formulas)


def _zeros(rows: int, columns: int) -> List[List[Rational]]:
    return [[0] * columns for _ in range(rows)]


def compile_formula(formula: Formula, input_dim: Optional[int] = None) -> AcrGnn:
    net, _ = compile_with_table(formula, input_dim)
    return net


def compile_with_table(formula: Formula, input_dim: Optional[int] = None) -> Tuple[AcrGnn, SubformulaTable]:
    info = stats(formula)
    d = info.max_prop if input_dim is None else input_dim
    if info.max_prop > d:
        raise InvalidParameterError(
            f"formula mentions p{info.max_prop} but the input dimension is {d}")
    table = SubformulaTable.of(formula)
    bound = info.max_grading or 1
    aggregation = AggregationSpec.bounded(bound)
    readout = AggregationSpec.sum_all()
    m = len(table)

    copy_self = _zeros(d, m)
    copy_bias: List[Rational] = [0] * m
    for node in table.formulas:
        j = table.dim(node)
        if isinstance(node, Prop):
            copy_self[node.index - 1][j] = 1
        elif isinstance(node, Top):
            copy_bias[j] = 1
    layers = [Layer.build(copy_self, _zeros(d, m), _zeros(d, m), copy_bias,
                          activation=Activation.CLAMP01, aggregation=aggregation, readout=readout)]

    self_weights = _zeros(m, m)
    aggregate_weights = _zeros(m, m)
    readout_weights = _zeros(m, m)
    bias: List[Rational] = [0] * m
    for node in table.formulas:
        j = table.dim(node)
        if isinstance(node, Top):
            bias[j] = 1
        elif isinstance(node, Prop):
            self_weights[j][j] = 1
        elif isinstance(node, Not):
            self_weights[table.dim(node.body)][j] = -1
            bias[j] = 1
        elif isinstance(node, And):
            self_weights[table.dim(node.left)][j] += 1
            self_weights[table.dim(node.right)][j] += 1
            bias[j] = -1
        elif isinstance(node, Diamond):
            aggregate_weights[table.dim(node.body)][j] = 1
            bias[j] = -(node.grade - 1)
        elif isinstance(node, GlobalExists):
            readout_weights[table.dim(node.body)][j] = 1
            bias[j] = -(node.grade - 1)
        else:
            raise TypeError(f"unknown formula node {node!r}")
    # a subformula of nesting height h is exact from layer h + 1 on
    for _ in range(info.height):
        layers.append(Layer.build(self_weights, aggregate_weights, readout_weights, bias,
                                  activation=Activation.CLAMP01, aggregation=aggregation,
                                  readout=readout))
    weights: List[Rational] = [0] * m
    weights[table.dim(formula)] = 1
    classifier = Classifier.build(weights, 1)
    logger.debug("compiled %d subformulas into %d layers (bound %d)", m, len(layers), bound)
    net = AcrGnn(d, tuple(layers), classifier, name=f"compiled:{_short(formula)}")
    return net, table


def _short(formula: Formula, limit: int = 60) -> str:
    text = to_text(formula)
    return text if len(text) <= limit else text[: limit - 3] + "..."


__all__ = ["SubformulaTable", "compile_formula", "compile_with_table"]
