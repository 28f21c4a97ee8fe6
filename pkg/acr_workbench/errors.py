"""Exception hierarchy shared by every workbench module."""
from __future__ import annotations

from typing import Iterable, List, Optional


class WorkbenchError(Exception):
    """Base class for all errors raised by the workbench."""


class InvalidParameterError(WorkbenchError, ValueError):
    """A numeric or structural parameter is outside its admissible range."""


class CapExceededError(WorkbenchError):
    """A brute-force routine was asked to run above its configured size cap."""

    def __init__(self, what: str, value: int, limit: int) -> None:
        super().__init__(f"{what}: {value} exceeds the configured cap {limit}")
        self.what = what
        self.value = value
        self.limit = limit


class DimensionMismatchError(WorkbenchError):
    """Graphs, patterns or networks disagree on mode or feature dimension."""


class GraphFormatError(WorkbenchError):
    """Malformed FGR or network text."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


class FormulaSyntaxError(WorkbenchError):
    """A formula string does not conform to the GML grammar."""

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        suffix = f" (at position {position})" if position is not None else ""
        super().__init__(message + suffix)
        self.position = position


class PreconditionError(WorkbenchError):
    """One or more named preconditions of a construction failed."""

    def __init__(self, operation: str, clauses: Iterable[str]) -> None:
        self.operation = operation
        self.clauses: List[str] = list(clauses)
        super().__init__(f"{operation}: precondition failed: " + "; ".join(self.clauses))


class NotAGadgetisationError(PreconditionError):
    """The input graph violates one of the gadget clauses psi1..psi4."""

    def __init__(self, clause: str, detail: str) -> None:
        super().__init__("degadgetise", [f"{clause}: {detail}"])
        self.clause = clause


__all__ = [
    "WorkbenchError",
    "InvalidParameterError",
    "CapExceededError",
    "DimensionMismatchError",
    "GraphFormatError",
    "FormulaSyntaxError",
    "PreconditionError",
    "NotAGadgetisationError",
]
