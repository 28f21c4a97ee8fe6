"""Featured graphs, their generators and the structural oracles over them."""

from acr_workbench.graphs.core import FeaturedGraph, GraphMode, c_restrict, neighbourhoods
from acr_workbench.graphs.fgr import load_graph, read_graph, save_graph, write_graph
from acr_workbench.graphs.gadgets import degadgetise, gadgetise, is_gadgetisation
from acr_workbench.graphs.generators import (
    enumerate_digraphs,
    make_directed_cycle,
    make_strict_linear_order,
    random_graph,
)

__all__ = [
    "FeaturedGraph",
    "GraphMode",
    "c_restrict",
    "degadgetise",
    "enumerate_digraphs",
    "gadgetise",
    "is_gadgetisation",
    "load_graph",
    "make_directed_cycle",
    "make_strict_linear_order",
    "neighbourhoods",
    "random_graph",
    "read_graph",
    "save_graph",
    "write_graph",
]
