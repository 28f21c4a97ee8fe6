"""Degree-sequence facts behind the order characterisation."""
from __future__ import annotations

from itertools import permutations, product
from typing import Any, Dict, List, Set, Tuple

from acr_workbench.models import SuiteReport, Violation
from acr_workbench.sequences import (
    gale_ryser_feasible,
    rearrangement_holds,
    summation_by_parts,
    verify_sequence_lemma,
)
from acr_workbench.suites.base import Suite, SuiteContext, case_rng


def realisable_margins(size: int) -> Set[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Row and column sums of every ``size x size`` 0/1 matrix."""

    margins = set()
    for bits in product((0, 1), repeat=size * size):
        rows = tuple(sum(bits[i * size:(i + 1) * size]) for i in range(size))
        columns = tuple(sum(bits[i * size + j] for i in range(size)) for j in range(size))
        margins.add((rows, columns))
    return margins


def gale_ryser_violations(size: int, max_entry: int) -> Tuple[int, List[Violation]]:
    """Every row and column vector of length ``size``, sorted or not, against brute force."""

    margins = realisable_margins(size)
    checked = 0
    violations: List[Violation] = []
    for rows in product(range(max_entry + 1), repeat=size):
        for columns in product(range(max_entry + 1), repeat=size):
            checked += 1
            expected = (rows, columns) in margins
            if gale_ryser_feasible(rows, columns, warn=False) != expected:
                violations.append(Violation(
                    check="gale_ryser_matches_brute_force",
                    detail=f"rows={list(rows)} columns={list(columns)} exists={expected}"))
    return checked, violations


class SequenceSuite(Suite):
    name = "appendixA"
    description = "order functional bound, improvement steps and Gale-Ryser feasibility"

    def parameters(self, context: SuiteContext) -> Dict[str, Any]:
        return {
            "max_n": min(int(context.option(self.name, "n", 6)), context.limits.sequence_length),
            "matrix_size": int(context.option(self.name, "matrix_size", 3)),
            "max_entry": int(context.option(self.name, "max_entry", 3)),
            "identity_cases": int(context.option(self.name, "identity_cases", 200)),
        }

    def check(self, context: SuiteContext, parameters: Dict[str, Any], report: SuiteReport) -> None:
        for n in range(1, parameters["max_n"] + 1):
            lemma = verify_sequence_lemma(n, cap=parameters["max_n"])
            report.checked += lemma.checked
            report.violations.extend(lemma.violations)
        for size in range(1, parameters["matrix_size"] + 1):
            checked, violations = gale_ryser_violations(size, parameters["max_entry"])
            report.checked += checked
            report.violations.extend(violations)
        for index in range(parameters["identity_cases"]):
            report.checked += 1
            report.violations.extend(_identity_case(context.seed, index))


def _identity_case(seed: int, index: int) -> List[Violation]:
    rng = case_rng(seed, index)
    n = rng.randint(1, 6)
    a = [rng.randint(-5, 5) for _ in range(n)]
    b = [rng.randint(-5, 5) for _ in range(n)]
    violations = []
    lhs, rhs = summation_by_parts(a, b)
    if lhs != rhs:
        violations.append(Violation(check="summation_by_parts",
                                    detail=f"a={a} b={b}: {lhs} != {rhs}"))
    x, y = sorted(a), sorted(b)
    pairings = list(permutations(range(n))) if n <= 5 else [rng.sample(range(n), n)]
    if not all(rearrangement_holds(x, y, pairing) for pairing in pairings):
        violations.append(Violation(check="rearrangement",
                                    detail=f"x={x} y={y}: reversed pairing is not minimal"))
    return violations


__all__ = ["SequenceSuite", "gale_ryser_violations", "realisable_margins"]
