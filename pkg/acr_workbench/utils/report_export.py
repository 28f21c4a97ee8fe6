"""Render reports as deterministic text or TSV."""
from __future__ import annotations

import json
from typing import Iterable, List

from acr_workbench.models import FamilyReport, PropertyFormulaResult, SuiteReport, SurgeryReport, VerificationRun

FORMATS = ("text", "tsv")


def render_run(run: VerificationRun, fmt: str = "text", timings: bool = False) -> str:
    """Whole run; identifiers and runtimes only appear with ``timings``."""

    if fmt == "tsv":
        lines = ["suite\tchecked\tviolations\tstatus\tfirst_check\tfirst_detail"
                 + ("\tseconds" if timings else "")]
        for report in run.reports:
            first = report.first_counterexample
            row = [report.suite, str(report.checked), str(len(report.violations)),
                   _status(report.passed), first.check if first else "", _one_line(first.detail) if first else ""]
            if timings:
                row.append(f"{report.elapsed_seconds:.3f}")
            lines.append("\t".join(row))
        return _join(lines)

    paragraphs: List[str] = [f"verification run (seed {run.seed})"]
    if timings:
        paragraphs.append(f"run id: {run.run_id}")
        paragraphs.append(f"started: {run.started_at.isoformat()}")
    paragraphs.append("")
    for report in run.reports:
        paragraphs.extend(render_suite(report, timings))
        paragraphs.append("")
    total = sum(len(report.violations) for report in run.reports)
    paragraphs.append(f"overall: {_status(run.passed)} ({total} violations)")
    return _join(paragraphs)


def render_suite(report: SuiteReport, timings: bool = False) -> List[str]:
    paragraphs = [f"[{report.suite}] {_status(report.passed)}"]
    if report.parameters:
        paragraphs.append("parameters: " + json.dumps(report.parameters, sort_keys=True))
    paragraphs.append(f"checked: {report.checked}")
    paragraphs.append(f"violations: {len(report.violations)}")
    for note in report.notes:
        paragraphs.append(f"note: {note}")
    first = report.first_counterexample
    if first is not None:
        paragraphs.append(f"first counterexample: {first.check}: {first.detail}")
        if first.witness:
            paragraphs.extend("  " + line for line in _normalise_text(first.witness))
    if timings:
        paragraphs.append(f"elapsed: {report.elapsed_seconds:.3f}s")
    return paragraphs


def render_surgery(report: SurgeryReport, fmt: str = "text") -> str:
    if fmt == "tsv":
        lines = ["vertex\tcertified"]
        lines.extend(f"{vertex}\t{int(ok)}" for vertex, ok in enumerate(report.certificate))
        lines.extend(f"{name}\t{int(ok)}" for name, ok in sorted(report.conditions.items()))
        return _join(lines)
    paragraphs = [f"{report.operation}: {_status(report.valid)}"]
    paragraphs.append(f"rewrites: {len(report.operations)}")
    paragraphs.extend("  " + operation for operation in report.operations)
    failed = report.failed_vertices()
    paragraphs.append("certificate: all vertices bisimilar" if not failed
                      else f"certificate: vertices {failed} changed class")
    for name, ok in sorted(report.conditions.items()):
        paragraphs.append(f"{name}: {'holds' if ok else 'fails'}")
    return _join(paragraphs)


def render_family(report: FamilyReport, fmt: str = "text") -> str:
    fields = [
        ("L", report.L),
        ("c", report.c),
        ("order_size", report.order_size),
        ("vertices", report.vertices),
        ("edge_difference", report.edge_difference),
        ("g_is_order_gadget", report.g_is_order_gadget),
        ("h_is_order_gadget", report.h_is_order_gadget),
        ("equivalent_vertices", report.equivalent_vertices),
        ("failing_vertices", " ".join(str(v) for v in report.failing_vertices)),
        ("status", _status(report.passed)),
    ]
    separator = "\t" if fmt == "tsv" else ": "
    return _join(f"{name}{separator}{value}" for name, value in fields)


def render_property_formula(result: PropertyFormulaResult) -> str:
    paragraphs = [f"consistent: {result.consistent}", f"disjuncts: {result.disjuncts}", result.detail]
    if result.formula is not None:
        paragraphs.append(result.formula)
    return _join(paragraphs)


def _status(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def _one_line(value: str) -> str:
    return " ".join(value.split())


def _normalise_text(value: str) -> List[str]:
    if not value:
        return [""]
    lines = [line.rstrip() for line in value.splitlines()]
    return lines or [""]


def _join(lines: Iterable[str]) -> str:
    return "\n".join(lines) + "\n"


__all__ = [
    "FORMATS",
    "render_family",
    "render_property_formula",
    "render_run",
    "render_suite",
    "render_surgery",
]
