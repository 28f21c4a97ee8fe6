"""Seeded random formulas for compiler and evaluator fuzzing."""
from __future__ import annotations

from typing import List

from acr_workbench.errors import InvalidParameterError
from acr_workbench.graphs.generators import SeedLike, make_rng
from acr_workbench.logic.syntax import TOP, And, Diamond, Formula, GlobalExists, Not, Prop, disjunction


def random_formula(
    depth: int,
    d: int,
    max_grading: int = 3,
    allow_global: bool = True,
    seed: SeedLike = None,
    budget: int = 6,
) -> Formula:
    """Random formula whose modal and global nesting stays within ``depth``.

    ``budget`` bounds the number of connectives along any branch, which
    keeps formulas small enough for brute-force cross-checks.
    """

    if depth < 0 or d < 0 or max_grading < 1 or budget < 0:
        raise InvalidParameterError("random_formula needs depth, d, budget >= 0 and max_grading >= 1")
    rng = make_rng(seed)

    def leaf() -> Formula:
        if d > 0 and rng.random() < 0.75:
            return Prop(rng.randint(1, d))
        return TOP

    def build(depth_left: int, budget_left: int) -> Formula:
        if budget_left <= 0:
            return leaf()
        kinds: List[str] = ["leaf", "not", "and", "or"]
        if depth_left > 0:
            kinds += ["diamond", "diamond"]
            if allow_global:
                kinds.append("exists")
        kind = rng.choice(kinds)
        if kind == "leaf":
            return leaf()
        if kind == "not":
            return Not(build(depth_left, budget_left - 1))
        if kind == "and":
            return And(build(depth_left, budget_left - 1), build(depth_left, budget_left - 1))
        if kind == "or":
            return disjunction([build(depth_left, budget_left - 1), build(depth_left, budget_left - 1)])
        grade = rng.randint(1, max_grading)
        if kind == "diamond":
            return Diamond(grade, build(depth_left - 1, budget_left - 1))
        return GlobalExists(grade, build(depth_left - 1, budget_left - 1))

    return build(depth, budget)


__all__ = ["random_formula"]
