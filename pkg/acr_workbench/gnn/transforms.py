"""Structural rewrites of ACR-GNNs: simplification and parallel composition."""
from __future__ import annotations

from typing import List, Sequence, Tuple

from acr_workbench.errors import DimensionMismatchError, InvalidParameterError
from acr_workbench.gnn.network import (
    AcrGnn,
    Activation,
    AggregationKind,
    AggregationSpec,
    Classifier,
    Layer,
    Matrix,
    Rational,
)


def _zeros(rows: int, columns: int) -> List[List[Rational]]:
    return [[0] * columns for _ in range(rows)]


def identity_layer(width: int) -> Layer:
    """Copies a non-negative embedding unchanged through a ReLU."""

    self_weights = _zeros(width, width)
    for i in range(width):
        self_weights[i][i] = 1
    return Layer.build(self_weights, _zeros(width, width), _zeros(width, width), [0] * width)


def to_simple(net: AcrGnn) -> AcrGnn:
    """Rewrite a clamp-activated 0/1 network into a simple (sum, ReLU) one.

    Every clamped unit ``clamp(z)`` becomes the pair ``ReLU(z), ReLU(z - 1)``
    whose difference equals ``clamp(z)`` for every rational ``z``; consuming
    layers and the classifier read the pair with weights ``w`` and ``-w``.
    Bounded sums become plain sums, which is sound when every aggregated
    dimension is a 0/1 truth value that only enters a threshold
    ``clamp(sum - (k - 1))`` with ``k`` at most the bound, as in compiled
    formula networks.
    """

    for index, layer in enumerate(net.layers, start=1):
        if layer.activation is not Activation.CLAMP01:
            raise InvalidParameterError(f"layer {index} is not clamp-activated")
        if layer.aggregation.kind is AggregationKind.BOUNDED:
            for column in layer._agg_cols:
                if len(column) > 1 or any(weight != 1 for _, weight in column):
                    raise InvalidParameterError(
                        f"layer {index} mixes aggregated dimensions; bounded sum cannot be dropped")
    layers: List[Layer] = []
    for index, layer in enumerate(net.layers):
        doubled_input = index > 0
        layers.append(_split_layer(layer, doubled_input))
    weights: List[Rational] = []
    for weight in net.classifier.weights:
        weights.extend([weight, -weight])
    classifier = Classifier(tuple(weights), net.classifier.threshold, net.classifier.comparison)
    return AcrGnn(net.input_dim, tuple(layers), classifier, name=f"{net.name}-simple" if net.name else "simple")


def _fold_rows(matrix: Matrix, doubled: bool) -> List[List[Rational]]:
    if not doubled:
        return [list(row) for row in matrix]
    rows: List[List[Rational]] = []
    for row in matrix:
        rows.append(list(row))
        rows.append([-value for value in row])
    return rows


def _split_columns(rows: List[List[Rational]]) -> List[List[Rational]]:
    return [[value for value in row for _ in (0, 1)] for row in rows]


def _split_layer(layer: Layer, doubled_input: bool) -> Layer:
    def convert(matrix: Matrix, enabled: bool) -> List[List[Rational]]:
        rows = _fold_rows(matrix, doubled_input)
        if not enabled:
            rows = [[0] * len(row) for row in rows]
        return _split_columns(rows)

    bias: List[Rational] = []
    for value in layer.bias:
        bias.extend([value, value - 1])
    return Layer.build(
        convert(layer.self_weights, True),
        convert(layer.aggregate_weights, layer.aggregation.kind is not AggregationKind.ZERO),
        convert(layer.readout_weights, layer.readout.kind is not AggregationKind.ZERO),
        bias,
        activation=Activation.RELU,
        aggregation=AggregationSpec.sum_all(),
        readout=AggregationSpec.sum_all(),
    )


def parallel_layers(nets: Sequence[AcrGnn]) -> Tuple[Tuple[Layer, ...], List[int]]:
    """Run several simple networks side by side on the same input.

    Returns the combined layers and, per network, the offset of its final
    dimensions. Shorter networks are padded with identity layers, which is
    exact because ReLU outputs are non-negative.
    """

    if not nets:
        raise InvalidParameterError("parallel composition needs at least one network")
    input_dim = nets[0].input_dim
    for net in nets:
        if net.input_dim != input_dim:
            raise DimensionMismatchError("parallel networks must share the input dimension")
        if not all(layer.activation is Activation.RELU for layer in net.layers):
            raise InvalidParameterError("parallel composition needs ReLU networks")
    depth = max(net.depth for net in nets)
    padded: List[List[Layer]] = []
    for net in nets:
        stack = [_as_sum_layer(layer) for layer in net.layers]
        while len(stack) < depth:
            stack.append(identity_layer(stack[-1].output_dim))
        padded.append(stack)

    combined: List[Layer] = []
    for level in range(depth):
        parts = [stack[level] for stack in padded]
        combined.append(_block_layer(parts, shared_input=level == 0))
    offsets: List[int] = []
    offset = 0
    for stack in padded:
        offsets.append(offset)
        offset += stack[-1].output_dim
    return tuple(combined), offsets


def _as_sum_layer(layer: Layer) -> Layer:
    aggregate = layer.aggregate_weights
    readout = layer.readout_weights
    if layer.aggregation.kind is AggregationKind.ZERO:
        aggregate = tuple(tuple(0 for _ in row) for row in aggregate)
    elif layer.aggregation.kind is not AggregationKind.SUM:
        raise InvalidParameterError("parallel composition needs plain sum aggregation")
    if layer.readout.kind is AggregationKind.ZERO:
        readout = tuple(tuple(0 for _ in row) for row in readout)
    elif layer.readout.kind is not AggregationKind.SUM:
        raise InvalidParameterError("parallel composition needs plain sum readout")
    return Layer.build(layer.self_weights, aggregate, readout, layer.bias, activation=layer.activation)


def _block_layer(parts: Sequence[Layer], shared_input: bool) -> Layer:
    widths_out = [part.output_dim for part in parts]
    total_out = sum(widths_out)
    total_in = parts[0].input_dim if shared_input else sum(part.input_dim for part in parts)
    matrices = {name: _zeros(total_in, total_out) for name in ("self", "aggregate", "readout")}
    bias: List[Rational] = []
    row_offset = 0
    column_offset = 0
    for part in parts:
        for name, source in (("self", part.self_weights),
                             ("aggregate", part.aggregate_weights),
                             ("readout", part.readout_weights)):
            target = matrices[name]
            for i, row in enumerate(source):
                for j, value in enumerate(row):
                    if value:
                        target[row_offset + i][column_offset + j] = value
        bias.extend(part.bias)
        if not shared_input:
            row_offset += part.input_dim
        column_offset += part.output_dim
    return Layer.build(matrices["self"], matrices["aggregate"], matrices["readout"], bias)


__all__ = ["identity_layer", "parallel_layers", "to_simple"]
