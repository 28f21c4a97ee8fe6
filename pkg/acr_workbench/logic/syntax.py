"""Abstract syntax of graded modal logic with global counting (GML and GML∃)."""
from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Dict, Iterable, List, Optional

from acr_workbench.errors import InvalidParameterError


class Formula:
    """Base class of all formula nodes.

    Nodes are immutable and hashed structurally; the hash is computed once per
    node so that large formulas with shared subtrees stay cheap to put in
    dictionaries.
    """

    def _key(self) -> tuple:
        return tuple(getattr(self, item.name) for item in fields(self))

    def __hash__(self) -> int:
        cached = self.__dict__.get("_hash")
        if cached is None:
            cached = hash((type(self).__name__,) + self._key())
            object.__setattr__(self, "_hash", cached)
        return cached

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if type(self) is not type(other):
            return False
        if hash(self) != hash(other):
            return False
        return self._key() == other._key()

    def __ne__(self, other: object) -> bool:
        return not self.__eq__(other)

    def children(self) -> tuple:
        return ()

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, eq=False)
class Top(Formula):
    pass


@dataclass(frozen=True, eq=False)
class Prop(Formula):
    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise InvalidParameterError("proposition indices start at 1")


@dataclass(frozen=True, eq=False)
class Not(Formula):
    body: Formula

    def children(self) -> tuple:
        return (self.body,)


@dataclass(frozen=True, eq=False)
class And(Formula):
    left: Formula
    right: Formula

    def children(self) -> tuple:
        return (self.left, self.right)


@dataclass(frozen=True, eq=False)
class Diamond(Formula):
    """``<>=k body``: at least ``grade`` out-neighbours satisfy ``body``."""

    grade: int
    body: Formula

    def __post_init__(self) -> None:
        if self.grade < 1:
            raise InvalidParameterError("modal grading must be at least 1")

    def children(self) -> tuple:
        return (self.body,)


@dataclass(frozen=True, eq=False)
class GlobalExists(Formula):
    """``E>=k body``: at least ``grade`` vertices of the graph satisfy ``body``."""

    grade: int
    body: Formula

    def __post_init__(self) -> None:
        if self.grade < 1:
            raise InvalidParameterError("global grading must be at least 1")

    def children(self) -> tuple:
        return (self.body,)


TOP = Top()


def conjunction(items: Iterable[Formula]) -> Formula:
    """Left-nested conjunction; the empty conjunction is ``T``."""

    result: Optional[Formula] = None
    for item in items:
        result = item if result is None else And(result, item)
    return TOP if result is None else result


def disjunction(items: Iterable[Formula]) -> Formula:
    """Left-nested disjunction as sugar ``!(!a & !b)``; the empty one is ``!T``."""

    result: Optional[Formula] = None
    for item in items:
        result = item if result is None else Not(And(Not(result), Not(item)))
    return Not(TOP) if result is None else result


def implies(premise: Formula, conclusion: Formula) -> Formula:
    return Not(And(premise, Not(conclusion)))


def subformulas(formula: Formula) -> List[Formula]:
    """Distinct subformulas, children before parents, the input last."""

    order: List[Formula] = []
    seen = set()
    stack = [(formula, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            if node not in seen:
                seen.add(node)
                order.append(node)
            continue
        if node in seen:
            continue
        stack.append((node, True))
        for child in reversed(node.children()):
            if child not in seen:
                stack.append((child, False))
    return order


def to_text(formula: Formula) -> str:
    """Fully parenthesised canonical rendering in the workbench grammar."""

    memo: Dict[Formula, str] = {}
    for node in subformulas(formula):
        if isinstance(node, Top):
            text = "T"
        elif isinstance(node, Prop):
            text = f"p{node.index}"
        elif isinstance(node, Not):
            text = "!" + memo[node.body]
        elif isinstance(node, And):
            text = f"({memo[node.left]} & {memo[node.right]})"
        elif isinstance(node, Diamond):
            text = f"<>={node.grade} {memo[node.body]}"
        elif isinstance(node, GlobalExists):
            text = f"E>={node.grade} {memo[node.body]}"
        else:
            raise TypeError(f"unknown formula node {node!r}")
        memo[node] = text
    return memo[formula]


@dataclass(frozen=True)
class FormulaStats:
    modal_depth: int
    max_grading: Optional[int]
    max_global_grading: Optional[int]
    uses_global: bool
    max_prop: int
    size: int
    height: int


def stats(formula: Formula) -> FormulaStats:
    depth: Dict[Formula, int] = {}
    height: Dict[Formula, int] = {}
    max_grading: Optional[int] = None
    max_global: Optional[int] = None
    max_prop = 0
    nodes = subformulas(formula)
    for node in nodes:
        kids = node.children()
        child_depth = max((depth[kid] for kid in kids), default=0)
        height[node] = 1 + max((height[kid] for kid in kids), default=-1)
        if isinstance(node, Diamond):
            depth[node] = child_depth + 1
            max_grading = node.grade if max_grading is None else max(max_grading, node.grade)
        else:
            depth[node] = child_depth
        if isinstance(node, GlobalExists):
            max_global = node.grade if max_global is None else max(max_global, node.grade)
        if isinstance(node, Prop):
            max_prop = max(max_prop, node.index)
    return FormulaStats(
        modal_depth=depth[formula],
        max_grading=max_grading,
        max_global_grading=max_global,
        uses_global=max_global is not None,
        max_prop=max_prop,
        size=len(nodes),
        height=height[formula],
    )


__all__ = [
    "And",
    "Diamond",
    "Formula",
    "FormulaStats",
    "GlobalExists",
    "Not",
    "Prop",
    "TOP",
    "Top",
    "conjunction",
    "disjunction",
    "implies",
    "stats",
    "subformulas",
    "to_text",
]
