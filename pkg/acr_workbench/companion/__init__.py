"""Companion-graph surgery and characteristic formulas."""

from acr_workbench.companion.formulas import (
    CharacteristicBuilder,
    chi_formula,
    gamma_formula,
    property_formula,
    strip_global,
)
from acr_workbench.companion.surgery import (
    certify,
    ef_agreement,
    free_edge_transfer,
    free_witness,
    homogenise,
    initial_good_graph,
    saturate,
)

__all__ = [
    "CharacteristicBuilder",
    "certify",
    "chi_formula",
    "ef_agreement",
    "free_edge_transfer",
    "free_witness",
    "gamma_formula",
    "homogenise",
    "initial_good_graph",
    "property_formula",
    "saturate",
    "strip_global",
]
