"""Named graphs and networks resolvable from the command line."""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List

from acr_workbench.errors import InvalidParameterError
from acr_workbench.gnn.builders import build_gadget_order_gnn, build_linear_order_gnn
from acr_workbench.gnn.compiler import compile_formula
from acr_workbench.gnn.network import AcrGnn
from acr_workbench.gnn.serialization import load_network
from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.graphs.fgr import load_graph
from acr_workbench.graphs.generators import (
    make_complete_digraph,
    make_directed_cycle,
    make_edgeless,
    make_loop_and_two_cycle,
    make_strict_linear_order,
)
from acr_workbench.logic.parser import parse_formula


@dataclass(frozen=True)
class GraphRecipe:
    name: str
    description: str
    build: Callable[[], FeaturedGraph]


NAMED_GRAPHS: Dict[str, GraphRecipe] = {
    "order5": GraphRecipe(
        name="order5", description="strict linear order on 5 vertices",
        build=lambda: make_strict_linear_order(5)),
    "cycle3": GraphRecipe(
        name="cycle3", description="directed 3-cycle",
        build=lambda: make_directed_cycle(3)),
    "loop": GraphRecipe(
        name="loop", description="one vertex with a self-loop",
        build=lambda: FeaturedGraph.create(1, [(0, 0)])),
    "two-cycle": GraphRecipe(
        name="two-cycle", description="directed 2-cycle",
        build=lambda: make_directed_cycle(2)),
    "g3": GraphRecipe(
        name="g3", description="2-cycle plus a disjoint self-loop",
        build=make_loop_and_two_cycle),
    "edgeless2": GraphRecipe(
        name="edgeless2", description="two isolated vertices",
        build=lambda: make_edgeless(2)),
    "complete3": GraphRecipe(
        name="complete3", description="complete digraph on 3 vertices with loops",
        build=lambda: make_complete_digraph(3)),
}

_FAMILIES: Dict[str, Callable[[int], FeaturedGraph]] = {
    "order": make_strict_linear_order,
    "cycle": make_directed_cycle,
    "edgeless": make_edgeless,
    "complete": make_complete_digraph,
}
_SIZED = re.compile(r"^(order|cycle|edgeless|complete)(\d+)$")

NAMED_NETWORKS: Dict[str, Callable[[], AcrGnn]] = {
    "linear-order": build_linear_order_gnn,
    "gadget-order": build_gadget_order_gnn,
}


def graph_names() -> List[str]:
    return sorted(NAMED_GRAPHS)


def resolve_graph(reference: str) -> FeaturedGraph:
    """A catalog name, a sized family name such as ``order12``, or an FGR path."""

    recipe = NAMED_GRAPHS.get(reference)
    if recipe is not None:
        return recipe.build()
    match = _SIZED.match(reference)
    if match:
        return _FAMILIES[match.group(1)](int(match.group(2)))
    path = Path(reference)
    if not path.exists():
        raise InvalidParameterError(f"{reference!r} is neither a catalog graph nor an existing file")
    return load_graph(path)


def read_formula_argument(reference: str) -> str:
    """Formula text from a file when ``reference`` names one, else the string itself."""

    path = Path(reference)
    try:
        if path.is_file():
            return path.read_text("utf-8")
    except OSError:
        pass
    return reference


def resolve_network(reference: str) -> AcrGnn:
    """``linear-order``, ``gadget-order``, ``compiled:<formula>`` or a network file."""

    builder = NAMED_NETWORKS.get(reference)
    if builder is not None:
        return builder()
    if reference.startswith("compiled:"):
        formula = parse_formula(read_formula_argument(reference[len("compiled:"):]))
        return compile_formula(formula)
    path = Path(reference)
    if not path.exists():
        raise InvalidParameterError(f"{reference!r} is neither a named network nor an existing file")
    return load_network(path)


__all__ = [
    "GraphRecipe",
    "NAMED_GRAPHS",
    "NAMED_NETWORKS",
    "graph_names",
    "read_formula_argument",
    "resolve_graph",
    "resolve_network",
]
