"""Report models shared by the verification suites, surgery and the CLI."""
from __future__ import annotations

from datetime import datetime, timezone
from typing import Any, Dict, List, Optional
from uuid import uuid4

from pydantic import BaseModel, Field


def generate_identifier(prefix: str) -> str:
    """Generate a short unique identifier with a readable prefix."""
    return f"{prefix}-{uuid4().hex[:8]}"


class Violation(BaseModel):
    check: str = Field(..., description="Name of the property that failed")
    detail: str
    witness: Optional[str] = Field(
        None, description="Counterexample rendered as text (FGR, formula or sequence)")


class SuiteReport(BaseModel):
    suite: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    checked: int = 0
    violations: List[Violation] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def first_counterexample(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None


class VerificationRun(BaseModel):
    run_id: str = Field(default_factory=lambda: generate_identifier("run"))
    started_at: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))
    seed: int
    jobs: int = 1
    reports: List[SuiteReport] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    def find_report(self, suite: str) -> Optional[SuiteReport]:
        for report in self.reports:
            if report.suite == suite:
                return report
        return None


class SequenceLemmaReport(BaseModel):
    n: int
    checked: int
    bound: int = Field(..., description="C(n, 3), the lower bound of the order functional")
    equality_witnesses: List[List[int]] = Field(default_factory=list)
    violations: List[Violation] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


class SurgeryReport(BaseModel):
    operation: str
    operations: List[str] = Field(
        default_factory=list, description="Ordered log of the edge rewrites applied")
    certificate: List[bool] = Field(
        default_factory=list,
        description="Per vertex u: input,u and output,u are bisimilar with exact global counts")
    conditions: Dict[str, bool] = Field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return all(self.certificate) and all(self.conditions.values())

    def failed_vertices(self) -> List[int]:
        return [vertex for vertex, ok in enumerate(self.certificate) if not ok]


class FamilyReport(BaseModel):
    L: int
    c: int
    order_size: int = Field(..., description="2n + 1 with n = L*c + 1")
    vertices: int
    edge_difference: int = Field(..., description="Unordered edges in exactly one of G and H")
    g_is_order_gadget: bool
    h_is_order_gadget: bool
    equivalent_vertices: int
    failing_vertices: List[int] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.g_is_order_gadget
            and not self.h_is_order_gadget
            and not self.failing_vertices
            and self.equivalent_vertices == self.vertices
        )


class PropertyFormulaResult(BaseModel):
    consistent: bool
    formula: Optional[str] = None
    disjuncts: int = 0
    positive_index: Optional[int] = None
    negative_index: Optional[int] = None
    detail: str = ""
