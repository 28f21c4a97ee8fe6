"""Versioned text form of ACR-GNNs with exact rationals.

::

    acr 1
    name <text>                 optional
    input <d>
    layer <activation> <agg> <read>     agg/read: sum | zero | bounded:<c>
    A <row of the self matrix>          one line per input dimension
    C <row of the aggregation matrix>
    R <row of the readout matrix>
    b <bias>
    ...
    classifier ge|le <threshold>
    w <weights>

Rationals are written as ``num/den`` or plain integers. ``#`` starts a comment.
"""
from __future__ import annotations

from pathlib import Path
from typing import List, Optional, Tuple

from acr_workbench.errors import GraphFormatError, WorkbenchError
from acr_workbench.gnn.network import (
    AcrGnn,
    AggregationKind,
    AggregationSpec,
    Classifier,
    Layer,
    Vector,
    format_rational,
    to_rational,
)

FORMAT_VERSION = "1"


def _spec_token(spec: AggregationSpec) -> str:
    if spec.kind is AggregationKind.BOUNDED:
        return f"bounded:{spec.bound}"
    return spec.kind.value


def _vector_text(values: Vector) -> str:
    return " ".join(format_rational(value) for value in values)


def write_network(net: AcrGnn) -> str:
    lines = [f"acr {FORMAT_VERSION}"]
    if net.name:
        lines.append(f"name {net.name}")
    lines.append(f"input {net.input_dim}")
    for layer in net.layers:
        lines.append(f"layer {layer.activation.value} {_spec_token(layer.aggregation)} {_spec_token(layer.readout)}")
        for tag, matrix in (("A", layer.self_weights), ("C", layer.aggregate_weights), ("R", layer.readout_weights)):
            for row in matrix:
                lines.append(f"{tag} {_vector_text(row)}".rstrip())
        lines.append(f"b {_vector_text(layer.bias)}".rstrip())
    classifier = net.classifier
    lines.append(f"classifier {classifier.comparison.value} {format_rational(classifier.threshold)}")
    lines.append(f"w {_vector_text(classifier.weights)}".rstrip())
    return "\n".join(lines) + "\n"


class _LayerDraft:
    def __init__(self, line: int, tokens: List[str]) -> None:
        if len(tokens) != 4:
            raise GraphFormatError("expected 'layer <activation> <agg> <read>'", line=line)
        self.line = line
        self.activation = tokens[1]
        self.aggregation = _parse_spec(tokens[2], line)
        self.readout = _parse_spec(tokens[3], line)
        self.rows = {"A": [], "C": [], "R": []}
        self.bias: Optional[List] = None

    def build(self) -> Layer:
        if self.bias is None:
            raise GraphFormatError("layer without a bias line", line=self.line)
        try:
            return Layer.build(self.rows["A"], self.rows["C"], self.rows["R"], self.bias,
                               activation=self.activation, aggregation=self.aggregation,
                               readout=self.readout)
        except (WorkbenchError, ValueError) as exc:
            raise GraphFormatError(str(exc), line=self.line) from exc


def _parse_spec(token: str, line: int) -> AggregationSpec:
    name, _, bound = token.partition(":")
    try:
        return AggregationSpec.from_name(name, int(bound) if bound else None)
    except (WorkbenchError, ValueError) as exc:
        raise GraphFormatError(str(exc), line=line) from exc


def _parse_values(tokens: List[str], line: int) -> List:
    try:
        return [to_rational(token) for token in tokens]
    except WorkbenchError as exc:
        raise GraphFormatError(str(exc), line=line) from exc


def read_network(text: str) -> AcrGnn:
    records = _records(text)
    if not records or records[0][1] != ["acr", FORMAT_VERSION]:
        raise GraphFormatError(f"expected header 'acr {FORMAT_VERSION}'", line=records[0][0] if records else 1)
    name = ""
    input_dim: Optional[int] = None
    drafts: List[_LayerDraft] = []
    classifier: Optional[Tuple[int, str, str]] = None
    weights: Optional[List] = None
    for line, tokens in records[1:]:
        tag = tokens[0]
        if tag == "name":
            name = " ".join(tokens[1:])
        elif tag == "input":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise GraphFormatError("expected 'input <d>'", line=line)
            input_dim = int(tokens[1])
        elif tag == "layer":
            drafts.append(_LayerDraft(line, tokens))
        elif tag in ("A", "C", "R", "b"):
            if not drafts or classifier is not None:
                raise GraphFormatError(f"'{tag}' line outside a layer", line=line)
            values = _parse_values(tokens[1:], line)
            if tag == "b":
                drafts[-1].bias = values
            else:
                drafts[-1].rows[tag].append(values)
        elif tag == "classifier":
            if len(tokens) != 3:
                raise GraphFormatError("expected 'classifier ge|le <threshold>'", line=line)
            classifier = (line, tokens[1], tokens[2])
        elif tag == "w":
            weights = _parse_values(tokens[1:], line)
        else:
            raise GraphFormatError(f"unknown record {tag!r}", line=line)
    if input_dim is None:
        raise GraphFormatError("missing 'input' line")
    if classifier is None or weights is None:
        raise GraphFormatError("missing classifier")
    layers = tuple(draft.build() for draft in drafts)
    line, comparison, threshold = classifier
    try:
        built = Classifier.build(weights, _parse_values([threshold], line)[0], comparison)
        return AcrGnn(input_dim, layers, built, name=name)
    except (WorkbenchError, ValueError) as exc:
        raise GraphFormatError(str(exc), line=line) from exc


def load_network(path: str | Path) -> AcrGnn:
    return read_network(Path(path).read_text("utf-8"))


def save_network(net: AcrGnn, path: str | Path) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(write_network(net), "utf-8")
    return target


def _records(text: str) -> List[Tuple[int, List[str]]]:
    records = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            records.append((number, content.split()))
    return records


__all__ = ["load_network", "read_network", "save_network", "write_network"]
