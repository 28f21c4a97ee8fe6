"""Workflow orchestration for verification runs."""
from __future__ import annotations

import logging
from typing import Any, Dict, Iterable, List, Optional

from acr_workbench.models import VerificationRun
from acr_workbench.suites import SUITES, resolve_suites
from acr_workbench.suites.base import Suite, SuiteContext
from acr_workbench.utils.configuration import WorkbenchSettings

logger = logging.getLogger(__name__)


class VerificationWorkflow:
    """Run a sequence of suites against one shared context."""

    def __init__(self, suites: Iterable[Suite] | None = None) -> None:
        self.suites: List[Suite] = list(suites) if suites else self._default_suites()

    @classmethod
    def for_names(cls, names: List[str]) -> "VerificationWorkflow":
        return cls(resolve_suites(names))

    def _default_suites(self) -> List[Suite]:
        return [suite() for suite in SUITES.values()]

    def execute(
        self,
        settings: Optional[WorkbenchSettings] = None,
        options: Optional[Dict[str, Dict[str, Any]]] = None,
    ) -> VerificationRun:
        settings = settings or WorkbenchSettings.default()
        context = SuiteContext({
            "seed": settings.seed,
            "jobs": settings.jobs,
            "limits": settings.limits,
            "options": options or {},
        })
        run = VerificationRun(seed=settings.seed, jobs=settings.jobs)
        for suite in self.suites:
            run.reports.append(suite(context))
        logger.info("run %s finished: %d suites, passed=%s", run.run_id, len(run.reports), run.passed)
        return run

    def debug_trace(self) -> List[Dict[str, str]]:
        trace: List[Dict[str, str]] = []
        for suite in self.suites:
            trace.append({
                "name": suite.name,
                "description": suite.description,
            })
        return trace


__all__ = ["VerificationWorkflow"]
