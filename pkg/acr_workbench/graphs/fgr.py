"""Reader and writer for the line-oriented FGR graph format.

::

    fgr 1
    mode directed|undirected
    n <int>
    d <int>
    f <vertex> <bitstring>      one per vertex, omitted when d = 0
    e <u> <v>                   undirected: each pair once with u <= v

``#`` starts a comment. Canonical output lists vertices ascending and edges
lexicographically.
"""
from __future__ import annotations

from pathlib import Path
from typing import Dict, List, Set, Tuple

from acr_workbench.errors import GraphFormatError, InvalidParameterError
from acr_workbench.graphs.core import Edge, FeaturedGraph, GraphMode

FORMAT_VERSION = "1"


def write_graph(graph: FeaturedGraph) -> str:
    lines = [
        f"fgr {FORMAT_VERSION}",
        f"mode {graph.mode.value}",
        f"n {graph.n}",
        f"d {graph.d}",
    ]
    if graph.d > 0:
        for vertex in graph.vertices:
            bits = "".join(str(bit) for bit in graph.features[vertex])
            lines.append(f"f {vertex} {bits}")
    for u, v in graph.sorted_edges():
        if not graph.directed and u > v:
            continue
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> FeaturedGraph:
    records = _records(text)
    header: List[Tuple[int, List[str]]] = records[:4]
    if len(header) < 4:
        raise GraphFormatError("truncated header", line=records[-1][0] if records else 1)
    _expect(header[0], "fgr", FORMAT_VERSION)
    mode_value = _expect(header[1], "mode")
    try:
        mode = GraphMode(mode_value)
    except ValueError:
        raise GraphFormatError(f"unknown mode {mode_value!r}", line=header[1][0]) from None
    n = _positive_int(header[2], "n", minimum=1)
    d = _positive_int(header[3], "d", minimum=0)

    features: Dict[int, Tuple[int, ...]] = {}
    edges: Set[Edge] = set()
    seen_pairs: Set[Edge] = set()
    for line_no, tokens in records[4:]:
        kind = tokens[0]
        if kind == "f":
            if edges:
                raise GraphFormatError("feature line after the edge list", line=line_no)
            if d == 0:
                raise GraphFormatError("feature line in a graph with d = 0", line=line_no)
            if len(tokens) != 3:
                raise GraphFormatError("expected 'f <vertex> <bits>'", line=line_no)
            vertex = _vertex(tokens[1], n, line_no)
            bits = tokens[2]
            if len(bits) != d or any(ch not in "01" for ch in bits):
                raise GraphFormatError(
                    f"feature vector {bits!r} must be {d} binary digits", line=line_no)
            if vertex in features:
                raise GraphFormatError(f"duplicate feature line for vertex {vertex}", line=line_no)
            features[vertex] = tuple(int(ch) for ch in bits)
        elif kind == "e":
            if len(tokens) != 3:
                raise GraphFormatError("expected 'e <u> <v>'", line=line_no)
            u = _vertex(tokens[1], n, line_no)
            v = _vertex(tokens[2], n, line_no)
            if mode is GraphMode.UNDIRECTED and u > v:
                raise GraphFormatError(
                    f"undirected edge ({u}, {v}) must be listed with u <= v", line=line_no)
            if (u, v) in seen_pairs:
                raise GraphFormatError(f"duplicate edge ({u}, {v})", line=line_no)
            seen_pairs.add((u, v))
            edges.add((u, v))
        else:
            raise GraphFormatError(f"unknown record {kind!r}", line=line_no)

    if d > 0 and len(features) != n:
        missing = sorted(set(range(n)) - set(features))
        raise GraphFormatError(f"missing feature lines for vertices {missing}")
    vectors = [features.get(v, ()) for v in range(n)]
    try:
        return FeaturedGraph.create(n, edges, vectors, d=d, mode=mode)
    except InvalidParameterError as exc:
        raise GraphFormatError(str(exc)) from exc


def load_graph(path: str | Path) -> FeaturedGraph:
    return read_graph(Path(path).read_text("utf-8"))


def save_graph(graph: FeaturedGraph, path: str | Path) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(write_graph(graph), "utf-8")
    return target


def _records(text: str) -> List[Tuple[int, List[str]]]:
    records = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            records.append((number, content.split()))
    return records


def _expect(record: Tuple[int, List[str]], keyword: str, value: str | None = None) -> str:
    line_no, tokens = record
    if len(tokens) != 2 or tokens[0] != keyword:
        raise GraphFormatError(f"expected '{keyword} <value>'", line=line_no)
    if value is not None and tokens[1] != value:
        raise GraphFormatError(f"unsupported {keyword} {tokens[1]!r}", line=line_no)
    return tokens[1]


def _positive_int(record: Tuple[int, List[str]], keyword: str, minimum: int) -> int:
    raw = _expect(record, keyword)
    try:
        value = int(raw)
    except ValueError:
        raise GraphFormatError(f"{keyword} must be an integer", line=record[0]) from None
    if value < minimum:
        raise GraphFormatError(f"{keyword} must be >= {minimum}", line=record[0])
    return value


def _vertex(raw: str, n: int, line_no: int) -> int:
    try:
        vertex = int(raw)
    except ValueError:
        raise GraphFormatError(f"vertex {raw!r} is not an integer", line=line_no) from None
    if not 0 <= vertex < n:
        raise GraphFormatError(f"vertex {vertex} out of range for n={n}", line=line_no)
    return vertex


__all__ = ["load_graph", "read_graph", "save_graph", "write_graph"]
