"""Base classes and helpers for verification suites."""
from __future__ import annotations

import logging
import time
from abc import ABC, abstractmethod
from multiprocessing import Pool
from typing import Any, Callable, Dict, Iterable, List, Sequence, Tuple

from acr_workbench.graphs.generators import make_rng
from acr_workbench.models import SuiteReport, Violation
from acr_workbench.utils.configuration import WorkbenchLimits

logger = logging.getLogger(__name__)

CaseResult = Tuple[int, List[Violation]]


class SuiteContext(Dict[str, Any]):
    """Run-wide values shared by every suite: ``seed``, ``jobs``, ``limits`` and per-suite overrides."""

    @property
    def seed(self) -> int:
        return int(self.get("seed", 7))

    @property
    def jobs(self) -> int:
        return max(1, int(self.get("jobs", 1)))

    @property
    def limits(self) -> WorkbenchLimits:
        return self.get("limits") or WorkbenchLimits()

    def option(self, suite: str, key: str, default: Any) -> Any:
        """``context["options"][suite][key]``, falling back to ``default``."""

        options = self.get("options") or {}
        value = options.get(suite, {}).get(key)
        return default if value is None else value


class Suite(ABC):
    """A named battery of property checks producing one :class:`SuiteReport`."""

    name: str = "suite"
    description: str = ""

    def __init__(self) -> None:
        self._last_report: SuiteReport | None = None

    @abstractmethod
    def parameters(self, context: SuiteContext) -> Dict[str, Any]:
        """Resolved parameters, recorded in the report."""

    @abstractmethod
    def check(self, context: SuiteContext, parameters: Dict[str, Any], report: SuiteReport) -> None:
        """Run the checks, adding to ``report.checked`` and ``report.violations``."""

    def __call__(self, context: SuiteContext) -> SuiteReport:
        parameters = self.parameters(context)
        report = SuiteReport(suite=self.name, parameters=parameters)
        logger.info("suite %s started with %s", self.name, parameters)
        started = time.perf_counter()
        self.check(context, parameters, report)
        report.elapsed_seconds = round(time.perf_counter() - started, 3)
        for violation in report.violations[:5]:
            logger.warning("%s: %s: %s", self.name, violation.check, violation.detail)
        logger.info("suite %s checked %d cases, %d violations in %.3fs",
                    self.name, report.checked, len(report.violations), report.elapsed_seconds)
        self._last_report = report
        context.setdefault("reports", {})[self.name] = report
        return report

    @property
    def last_report(self) -> SuiteReport | None:
        return self._last_report


def case_rng(seed: int, index: int):
    """Generator for case ``index``; independent of how cases are sharded."""

    return make_rng(seed * 1_000_003 + index)


def chunk(count: int, parts: int) -> List[range]:
    size = max(1, -(-count // max(1, parts)))
    return [range(start, min(start + size, count)) for start in range(0, count, size)]


def run_sharded(worker: Callable[[Any], CaseResult], payloads: Sequence[Any], jobs: int) -> CaseResult:
    """Map ``worker`` over ``payloads`` and merge results in payload order.

    ``worker`` must be a module-level function so that it pickles.
    """

    if jobs > 1 and len(payloads) > 1:
        with Pool(min(jobs, len(payloads))) as pool:
            results: Iterable[CaseResult] = pool.map(worker, payloads)
    else:
        results = map(worker, payloads)
    checked = 0
    violations: List[Violation] = []
    for count, found in results:
        checked += count
        violations.extend(found)
    return checked, violations


def record(report: SuiteReport, outcome: CaseResult) -> None:
    checked, violations = outcome
    report.checked += checked
    report.violations.extend(violations)


__all__ = [
    "CaseResult",
    "Suite",
    "SuiteContext",
    "case_rng",
    "chunk",
    "record",
    "run_sharded",
]
