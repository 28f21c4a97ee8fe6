from acr_workbench.gnn.builders import (
    build_gadget_order_gnn,
    build_linear_order_gnn,
    gadget_structure_formula,
    random_bounded_network,
)
from acr_workbench.gnn.compiler import SubformulaTable, compile_formula, compile_with_table
from acr_workbench.gnn.network import (
    AcrGnn,
    Activation,
    AggregationKind,
    AggregationSpec,
    Classifier,
    Comparison,
    EmbeddingTrace,
    Layer,
    aggregation_ignores_excess,
    describe,
    final_embeddings,
    is_ac_gnn,
    is_simple,
    run,
    run_all,
    run_trace,
)
from acr_workbench.gnn.serialization import load_network, read_network, save_network, write_network
from acr_workbench.gnn.transforms import identity_layer, parallel_layers, to_simple

__all__ = [
    "AcrGnn",
    "Activation",
    "AggregationKind",
    "AggregationSpec",
    "Classifier",
    "Comparison",
    "EmbeddingTrace",
    "Layer",
    "SubformulaTable",
    "aggregation_ignores_excess",
    "build_gadget_order_gnn",
    "build_linear_order_gnn",
    "compile_formula",
    "compile_with_table",
    "describe",
    "final_embeddings",
    "gadget_structure_formula",
    "identity_layer",
    "is_ac_gnn",
    "is_simple",
    "load_network",
    "parallel_layers",
    "random_bounded_network",
    "read_network",
    "run",
    "run_all",
    "run_trace",
    "save_network",
    "to_simple",
    "write_network",
]
