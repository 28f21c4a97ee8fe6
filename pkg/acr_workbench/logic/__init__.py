"""Graded modal logic: syntax, grammar, evaluation and random generation."""

from acr_workbench.logic.parser import parse_formula
from acr_workbench.logic.random_formulas import random_formula
from acr_workbench.logic.semantics import build_degree_bound_formula, evaluate, satisfying_vertices
from acr_workbench.logic.syntax import (
    TOP,
    And,
    Diamond,
    Formula,
    GlobalExists,
    Not,
    Prop,
    Top,
    conjunction,
    disjunction,
    stats,
    to_text,
)

__all__ = [
    "And",
    "Diamond",
    "Formula",
    "GlobalExists",
    "Not",
    "Prop",
    "TOP",
    "Top",
    "build_degree_bound_formula",
    "conjunction",
    "disjunction",
    "evaluate",
    "parse_formula",
    "random_formula",
    "satisfying_vertices",
    "stats",
    "to_text",
]
