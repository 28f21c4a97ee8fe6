"""The two-pebble counterexample family at several parameter pairs."""
from __future__ import annotations

from typing import Any, Dict, List

from acr_workbench.families import c2_counterexample_family
from acr_workbench.models import SuiteReport, Violation
from acr_workbench.suites.base import Suite, SuiteContext

DEFAULT_PAIRS = [[1, 1], [1, 2], [2, 1], [2, 2]]


class FamilySuite(Suite):
    name = "family"
    description = "G and H agree on every vertex up to two-pebble equivalence, yet only G is an order gadget"

    def parameters(self, context: SuiteContext) -> Dict[str, Any]:
        L = context.option(self.name, "L", None)
        c = context.option(self.name, "c", None)
        pairs = [[int(L), int(c)]] if L is not None and c is not None else DEFAULT_PAIRS
        return {"pairs": pairs}

    def check(self, context: SuiteContext, parameters: Dict[str, Any], report: SuiteReport) -> None:
        for L, c in parameters["pairs"]:
            _, _, family = c2_counterexample_family(L, c, cap=context.limits.family_product)
            report.checked += family.vertices
            problems: List[str] = []
            if not family.g_is_order_gadget:
                problems.append("G is not an order gadget")
            if family.h_is_order_gadget:
                problems.append("H is an order gadget")
            if family.failing_vertices:
                problems.append(f"vertices {family.failing_vertices} are not equivalent")
            if family.edge_difference != 2:
                problems.append(f"G and H differ in {family.edge_difference} edges")
            for problem in problems:
                report.violations.append(Violation(check="counterexample_family", detail=f"L={L} c={c}: {problem}"))
            report.notes.append(f"L={L} c={c}: {family.vertices} vertices, "
                                f"{family.equivalent_vertices} equivalent")


__all__ = ["FamilySuite"]
