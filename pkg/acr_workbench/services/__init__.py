"""Registries of named graphs and networks."""

from acr_workbench.services.catalog import (
    NAMED_GRAPHS,
    NAMED_NETWORKS,
    read_formula_argument,
    resolve_graph,
    resolve_network,
)

__all__ = [
    "NAMED_GRAPHS",
    "NAMED_NETWORKS",
    "read_formula_argument",
    "resolve_graph",
    "resolve_network",
]
