"""Exact-rational ACR-GNNs: representation and evaluation.

Layer ``i`` maps the previous embedding ``x`` of a vertex ``v`` to::

    act(x A + agg({{x_u : u in N_out(v)}}) C + read({{x_u : u in V}}) R + b)

All arithmetic is on ``int`` and ``fractions.Fraction``; values whose
denominator is 1 are stored as plain ints.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from acr_workbench.errors import DimensionMismatchError, InvalidParameterError
from acr_workbench.graphs.core import FeaturedGraph, c_restrict

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]
Vector = Tuple[Rational, ...]
Matrix = Tuple[Vector, ...]
SparseColumn = Tuple[Tuple[int, Rational], ...]


def normalise(value: Rational) -> Rational:
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def to_rational(value: Union[str, int, Fraction]) -> Rational:
    """Parse ``"num/den"`` or an integer into a normalised rational."""

    if isinstance(value, bool):
        return int(value)
    if isinstance(value, (int, Fraction)):
        return normalise(value)
    try:
        return normalise(Fraction(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameterError(f"not a rational number: {value!r}") from exc


def format_rational(value: Rational) -> str:
    value = normalise(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


class AggregationKind(str, Enum):
    SUM = "sum"
    BOUNDED = "bounded"
    ZERO = "zero"


@dataclass(frozen=True)
class AggregationSpec:
    """Sum over a multiset, optionally of its c-restriction, or constant zero."""

    kind: AggregationKind
    bound: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind is AggregationKind.BOUNDED:
            if self.bound is None or self.bound < 1:
                raise InvalidParameterError("bounded sum needs a bound c >= 1")
        elif self.bound is not None:
            raise InvalidParameterError(f"{self.kind.value} aggregation takes no bound")

    @classmethod
    def sum_all(cls) -> "AggregationSpec":
        return cls(AggregationKind.SUM)

    @classmethod
    def bounded(cls, c: int) -> "AggregationSpec":
        return cls(AggregationKind.BOUNDED, c)

    @classmethod
    def zero(cls) -> "AggregationSpec":
        return cls(AggregationKind.ZERO)

    @classmethod
    def from_name(cls, name: str, bound: Optional[int] = None) -> "AggregationSpec":
        try:
            kind = AggregationKind(name)
        except ValueError:
            raise InvalidParameterError(
                f"aggregation {name!r} is not representable; use sum, bounded or zero") from None
        return cls(kind, bound)

    def apply(self, multiset: Counter, width: int, dims: Sequence[int]) -> List[Rational]:
        """Aggregate a multiset of vectors; only ``dims`` are computed, the rest stay 0."""

        result: List[Rational] = [0] * width
        if self.kind is AggregationKind.ZERO or not dims:
            return result
        for vector, multiplicity in multiset.items():
            if self.kind is AggregationKind.BOUNDED:
                multiplicity = min(multiplicity, self.bound)
            for i in dims:
                value = vector[i]
                if value:
                    result[i] += multiplicity * value
        return result

    def describe(self) -> str:
        if self.kind is AggregationKind.BOUNDED:
            return f"bounded {self.bound}"
        return self.kind.value


class Activation(str, Enum):
    RELU = "relu"
    CLAMP01 = "clamp01"
    IDENTITY = "identity"

    def apply(self, value: Rational) -> Rational:
        if self is Activation.RELU:
            return value if value > 0 else 0
        if self is Activation.CLAMP01:
            if value <= 0:
                return 0
            return 1 if value >= 1 else value
        return value


def _matrix(rows: Iterable[Iterable[Union[str, int, Fraction]]]) -> Matrix:
    return tuple(tuple(to_rational(value) for value in row) for row in rows)


def _columns(matrix: Matrix, width: int) -> Tuple[SparseColumn, ...]:
    columns: List[List[Tuple[int, Rational]]] = [[] for _ in range(width)]
    for i, row in enumerate(matrix):
        for j, value in enumerate(row):
            if value:
                columns[j].append((i, value))
    return tuple(tuple(column) for column in columns)


@dataclass(frozen=True)
class Layer:
    """One aggregate-combine-readout layer; matrices are ``input_dim x output_dim``."""

    self_weights: Matrix
    aggregate_weights: Matrix
    readout_weights: Matrix
    bias: Vector
    activation: Activation = Activation.RELU
    aggregation: AggregationSpec = field(default_factory=AggregationSpec.sum_all)
    readout: AggregationSpec = field(default_factory=AggregationSpec.sum_all)
    _self_cols: Tuple[SparseColumn, ...] = field(init=False, repr=False, compare=False)
    _agg_cols: Tuple[SparseColumn, ...] = field(init=False, repr=False, compare=False)
    _read_cols: Tuple[SparseColumn, ...] = field(init=False, repr=False, compare=False)
    _agg_dims: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    _read_dims: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        width = len(self.bias)
        height = len(self.self_weights)
        for label, matrix in (("self", self.self_weights),
                              ("aggregate", self.aggregate_weights),
                              ("readout", self.readout_weights)):
            if len(matrix) != height:
                raise DimensionMismatchError(
                    f"{label} matrix has {len(matrix)} rows, expected {height}")
            for row in matrix:
                if len(row) != width:
                    raise DimensionMismatchError(
                        f"{label} matrix row has {len(row)} columns, expected {width}")
        object.__setattr__(self, "_self_cols", _columns(self.self_weights, width))
        object.__setattr__(self, "_agg_cols", _columns(self.aggregate_weights, width))
        object.__setattr__(self, "_read_cols", _columns(self.readout_weights, width))
        object.__setattr__(self, "_agg_dims", _used_rows(self.aggregate_weights))
        object.__setattr__(self, "_read_dims", _used_rows(self.readout_weights))

    @classmethod
    def build(
        cls,
        self_weights: Iterable[Iterable],
        aggregate_weights: Iterable[Iterable],
        readout_weights: Iterable[Iterable],
        bias: Iterable,
        activation: Activation | str = Activation.RELU,
        aggregation: Optional[AggregationSpec] = None,
        readout: Optional[AggregationSpec] = None,
    ) -> "Layer":
        return cls(
            self_weights=_matrix(self_weights),
            aggregate_weights=_matrix(aggregate_weights),
            readout_weights=_matrix(readout_weights),
            bias=tuple(to_rational(value) for value in bias),
            activation=Activation(activation),
            aggregation=aggregation or AggregationSpec.sum_all(),
            readout=readout or AggregationSpec.sum_all(),
        )

    @property
    def input_dim(self) -> int:
        return len(self.self_weights)

    @property
    def output_dim(self) -> int:
        return len(self.bias)


def _used_rows(matrix: Matrix) -> Tuple[int, ...]:
    return tuple(i for i, row in enumerate(matrix) if any(row))


class Comparison(str, Enum):
    AT_LEAST = "ge"
    AT_MOST = "le"


@dataclass(frozen=True)
class Classifier:
    """Linear threshold: accept iff ``<w, x> >= t`` (or ``<= t``)."""

    weights: Vector
    threshold: Rational
    comparison: Comparison = Comparison.AT_LEAST

    @classmethod
    def build(cls, weights: Iterable, threshold, comparison: Comparison | str = Comparison.AT_LEAST) -> "Classifier":
        return cls(
            weights=tuple(to_rational(value) for value in weights),
            threshold=to_rational(threshold),
            comparison=Comparison(comparison),
        )

    def score(self, vector: Sequence[Rational]) -> Rational:
        return normalise(sum((w * x for w, x in zip(self.weights, vector) if w), 0))

    def accepts(self, vector: Sequence[Rational]) -> bool:
        score = self.score(vector)
        if self.comparison is Comparison.AT_LEAST:
            return score >= self.threshold
        return score <= self.threshold


@dataclass(frozen=True)
class AcrGnn:
    input_dim: int
    layers: Tuple[Layer, ...]
    classifier: Classifier
    name: str = ""

    def __post_init__(self) -> None:
        if not self.layers:
            raise InvalidParameterError("an ACR-GNN needs at least one layer")
        expected = self.input_dim
        for index, layer in enumerate(self.layers, start=1):
            if layer.input_dim != expected:
                raise DimensionMismatchError(
                    f"layer {index} expects input dimension {layer.input_dim}, previous layer gives {expected}")
            expected = layer.output_dim
        if len(self.classifier.weights) != expected:
            raise DimensionMismatchError(
                f"classifier has {len(self.classifier.weights)} weights, final dimension is {expected}")

    @property
    def depth(self) -> int:
        return len(self.layers)

    @property
    def output_dim(self) -> int:
        return self.layers[-1].output_dim


@dataclass
class EmbeddingTrace:
    """``embeddings[i][v]`` is the layer-``i`` vector of vertex ``v``; layer 0 is the input."""

    embeddings: List[List[Vector]]

    def at(self, layer: int, v: int) -> Vector:
        return self.embeddings[layer][v]

    @property
    def final(self) -> List[Vector]:
        return self.embeddings[-1]

    def render(self) -> List[str]:
        lines = []
        for layer, vectors in enumerate(self.embeddings):
            for vertex, vector in enumerate(vectors):
                values = " ".join(format_rational(value) for value in vector)
                lines.append(f"{vertex}\t{layer}\t{values}")
        return lines


def apply_layer(
    layer: Layer,
    graph: FeaturedGraph,
    previous: Sequence[Vector],
    neighbour_cap: Optional[int] = None,
) -> List[Vector]:
    """One synchronous layer update of every vertex.

    With ``neighbour_cap`` each out-neighbour multiset is c-restricted before
    aggregation; used to confirm that bounded aggregations ignore the excess.
    """

    width_in = layer.input_dim
    readout_values: List[Rational] = [0] * width_in
    if layer._read_dims and layer.readout.kind is not AggregationKind.ZERO:
        readout_values = layer.readout.apply(Counter(previous), width_in, layer._read_dims)
    use_aggregate = bool(layer._agg_dims) and layer.aggregation.kind is not AggregationKind.ZERO
    outputs: List[Vector] = []
    for v in graph.vertices:
        x = previous[v]
        aggregated: Optional[List[Rational]] = None
        if use_aggregate:
            neighbours = Counter(previous[u] for u in graph.adjacency[v])
            if neighbour_cap is not None:
                neighbours = c_restrict(neighbours, neighbour_cap)
            aggregated = layer.aggregation.apply(neighbours, width_in, layer._agg_dims)
        row: List[Rational] = []
        for j, bias in enumerate(layer.bias):
            total = bias
            for i, weight in layer._self_cols[j]:
                value = x[i]
                if value:
                    total += weight * value
            if aggregated is not None:
                for i, weight in layer._agg_cols[j]:
                    value = aggregated[i]
                    if value:
                        total += weight * value
            for i, weight in layer._read_cols[j]:
                value = readout_values[i]
                if value:
                    total += weight * value
            row.append(normalise(layer.activation.apply(total)))
        outputs.append(tuple(row))
    return outputs


def run_trace(net: AcrGnn, graph: FeaturedGraph) -> EmbeddingTrace:
    if graph.d != net.input_dim:
        raise DimensionMismatchError(
            f"network expects feature dimension {net.input_dim}, graph has {graph.d}")
    current: List[Vector] = [tuple(int(bit) for bit in graph.features[v]) for v in graph.vertices]
    embeddings = [current]
    for layer in net.layers:
        current = apply_layer(layer, graph, current)
        embeddings.append(current)
    return EmbeddingTrace(embeddings)


def final_embeddings(net: AcrGnn, graph: FeaturedGraph) -> List[Vector]:
    return run_trace(net, graph).final


def run(net: AcrGnn, graph: FeaturedGraph, v: int) -> int:
    if not 0 <= v < graph.n:
        raise InvalidParameterError(f"vertex {v} is out of range for n={graph.n}")
    return int(net.classifier.accepts(run_trace(net, graph).final[v]))


def run_all(net: AcrGnn, graph: FeaturedGraph) -> List[int]:
    """Acceptance bit of every vertex from a single trace."""

    final = run_trace(net, graph).final
    return [int(net.classifier.accepts(vector)) for vector in final]


def aggregation_ignores_excess(net: AcrGnn, graph: FeaturedGraph, trace: Optional[EmbeddingTrace] = None) -> bool:
    """Recompute each bounded layer on c-restricted neighbourhoods and compare."""

    trace = trace or run_trace(net, graph)
    for index, layer in enumerate(net.layers):
        if layer.aggregation.kind is not AggregationKind.BOUNDED:
            continue
        recomputed = apply_layer(layer, graph, trace.embeddings[index],
                                 neighbour_cap=layer.aggregation.bound)
        if recomputed != trace.embeddings[index + 1]:
            logger.warning("layer %d changes under c-restriction", index + 1)
            return False
    return True


def is_simple(net: AcrGnn) -> bool:
    """Sum aggregation and readout everywhere and ReLU activations."""

    return all(
        layer.aggregation.kind is AggregationKind.SUM
        and layer.readout.kind is AggregationKind.SUM
        and layer.activation is Activation.RELU
        for layer in net.layers
    )


def is_ac_gnn(net: AcrGnn) -> bool:
    """No layer reads the global state."""

    return all(
        layer.readout.kind is AggregationKind.ZERO or not layer._read_dims
        for layer in net.layers
    )


def describe(net: AcrGnn) -> Dict[str, object]:
    return {
        "name": net.name,
        "input_dim": net.input_dim,
        "layers": net.depth,
        "widths": [layer.output_dim for layer in net.layers],
        "simple": is_simple(net),
        "ac": is_ac_gnn(net),
    }


__all__ = [
    "AcrGnn",
    "Activation",
    "AggregationKind",
    "AggregationSpec",
    "Classifier",
    "Comparison",
    "EmbeddingTrace",
    "Layer",
    "Rational",
    "aggregation_ignores_excess",
    "apply_layer",
    "describe",
    "final_embeddings",
    "format_rational",
    "is_ac_gnn",
    "is_simple",
    "normalise",
    "run",
    "run_all",
    "run_trace",
    "to_rational",
]
