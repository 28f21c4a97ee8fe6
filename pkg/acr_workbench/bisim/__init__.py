"""Graded bisimulations, their global-counting variants, two-pebble games and EF games."""

from acr_workbench.bisim.c2 import c2_equivalent, c2_types
from acr_workbench.bisim.ef import ef_equivalent, is_partial_isomorphism
from acr_workbench.bisim.games import c2_game_equivalent, graded_game_equivalent
from acr_workbench.bisim.refinement import (
    GlobalKind,
    GlobalMode,
    TypeAssignment,
    bisimilar,
    canonical_enumeration,
    class_table,
    graded_types,
)

__all__ = [
    "GlobalKind",
    "GlobalMode",
    "TypeAssignment",
    "bisimilar",
    "c2_equivalent",
    "c2_game_equivalent",
    "c2_types",
    "canonical_enumeration",
    "class_table",
    "ef_equivalent",
    "graded_game_equivalent",
    "graded_types",
    "is_partial_isomorphism",
]
