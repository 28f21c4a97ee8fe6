"""Degree-sequence toolkit: conjugates, Gale–Ryser feasibility and the order functional.

A non-increasing sequence of out-degrees summing to C(n, 2) satisfies
``sum(a[i] * a'[n-1-i]) >= C(n, 3)`` with equality only at ``(n-1, ..., 0)``.
``verify_sequence_lemma`` checks this exhaustively for small ``n``, together
with the improvement step that strictly lowers the functional.
"""
from __future__ import annotations

import logging
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple

from acr_workbench.errors import CapExceededError, DimensionMismatchError, InvalidParameterError
from acr_workbench.models import SequenceLemmaReport, Violation
from acr_workbench.utils.configuration import DEFAULT_LIMITS

logger = logging.getLogger(__name__)


def conjugate(values: Sequence[int], length: Optional[int] = None) -> List[int]:
    """``result[i-1] = |{j : values[j] >= i}|`` for ``i = 1..length`` (default ``len(values)``)."""

    size = len(values) if length is None else length
    return [sum(1 for value in values if value >= i) for i in range(1, size + 1)]


def is_non_increasing(values: Sequence[int]) -> bool:
    return all(values[i] >= values[i + 1] for i in range(len(values) - 1))


def gale_ryser_feasible(rows: Sequence[int], columns: Sequence[int], warn: bool = True) -> bool:
    """Whether a 0/1 matrix with these row and column sums exists.

    Unsorted rows are sorted first; ``warn=False`` skips the warning for
    callers that pass unsorted rows on purpose.
    """

    if len(rows) != len(columns):
        raise DimensionMismatchError(
            f"row and column sequences differ in length: {len(rows)} vs {len(columns)}")
    if any(value < 0 for value in list(rows) + list(columns)):
        return False
    if not is_non_increasing(rows):
        if warn:
            logger.warning("row sums %s are not non-increasing; sorting them", list(rows))
        rows = sorted(rows, reverse=True)
    if sum(rows) != sum(columns):
        return False
    column_conjugate = conjugate(columns, length=len(columns))
    row_total = 0
    conjugate_total = 0
    for k in range(len(rows)):
        row_total += rows[k]
        conjugate_total += column_conjugate[k]
        if row_total > conjugate_total:
            return False
    return True


def order_functional(values: Sequence[int]) -> int:
    """``sum(a[i] * a'[n+1-i])`` with ``a'`` the conjugate (1-based indices)."""

    if any(value < 0 for value in values):
        raise InvalidParameterError("order functional needs non-negative entries")
    if not is_non_increasing(values):
        raise InvalidParameterError("order functional needs a non-increasing sequence")
    conj = conjugate(values)
    n = len(values)
    return sum(values[i] * conj[n - 1 - i] for i in range(n))


def staircase(n: int) -> List[int]:
    return list(range(n - 1, -1, -1))


def improvement_step(values: Sequence[int]) -> List[int]:
    """Move one unit from the last entry above the staircase to the first entry below it."""

    n = len(values)
    target = staircase(n)
    if list(values) == target:
        raise InvalidParameterError("the staircase sequence admits no improvement step")
    if sum(values) != comb(n, 2):
        raise InvalidParameterError("improvement step needs a sequence summing to C(n, 2)")
    above = [i for i in range(n) if values[i] > target[i]]
    below = [i for i in range(n) if values[i] < target[i]]
    p, q = max(above), min(below)
    result = list(values)
    result[p] -= 1
    result[q] += 1
    return result


def non_increasing_sequences(length: int, total: int, bound: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """All non-increasing non-negative sequences of ``length`` summing to ``total``."""

    top = total if bound is None else min(bound, total)
    if length == 0:
        if total == 0:
            yield ()
        return
    # the head must be large enough for the tail to absorb the remainder
    lowest = -(-total // length)
    for head in range(top, lowest - 1, -1):
        for tail in non_increasing_sequences(length - 1, total - head, head):
            yield (head,) + tail


def verify_sequence_lemma(n: int, cap: Optional[int] = None) -> SequenceLemmaReport:
    limit = cap if cap is not None else DEFAULT_LIMITS.sequence_length
    if n < 1:
        raise InvalidParameterError("sequence length must be positive")
    if n > limit:
        raise CapExceededError("sequence length", n, limit)
    bound = comb(n, 3)
    extremal = tuple(staircase(n))
    violations: List[Violation] = []
    equality_witnesses: List[List[int]] = []
    checked = 0
    for sequence in non_increasing_sequences(n, comb(n, 2)):
        checked += 1
        value = order_functional(sequence)
        if value < bound:
            violations.append(Violation(
                check="functional_lower_bound",
                detail=f"functional {value} < C({n},3) = {bound}",
                witness=_format_sequence(sequence)))
        if value == bound:
            equality_witnesses.append(list(sequence))
            if sequence != extremal:
                violations.append(Violation(
                    check="equality_only_at_staircase",
                    detail=f"functional equals {bound} away from the staircase",
                    witness=_format_sequence(sequence)))
        if sequence != extremal:
            violations.extend(_check_improvement(sequence, value))
    if extremal not in {tuple(w) for w in equality_witnesses}:
        violations.append(Violation(
            check="staircase_attains_bound",
            detail=f"staircase functional differs from {bound}",
            witness=_format_sequence(extremal)))
    logger.info("sequence lemma n=%d: %d sequences, %d violations", n, checked, len(violations))
    return SequenceLemmaReport(
        n=n,
        checked=checked,
        bound=bound,
        equality_witnesses=equality_witnesses,
        violations=violations,
    )


def _check_improvement(sequence: Tuple[int, ...], value: int) -> List[Violation]:
    step = improvement_step(sequence)
    problems = []
    if not is_non_increasing(step):
        problems.append("not non-increasing")
    elif order_functional(step) >= value:
        problems.append("functional did not decrease")
    if sum(step) != sum(sequence):
        problems.append("sum changed")
    return [
        Violation(check="improvement_step", detail=problem, witness=_format_sequence(sequence))
        for problem in problems
    ]


def summation_by_parts(a: Sequence[int], b: Sequence[int]) -> Tuple[int, int]:
    """Both sides of ``sum(a_i b_i) = a_n B_n - sum_{i<n} (a_{i+1} - a_i) B_i``."""

    if len(a) != len(b):
        raise DimensionMismatchError("summation by parts needs equal lengths")
    partial = []
    running = 0
    for value in b:
        running += value
        partial.append(running)
    lhs = sum(x * y for x, y in zip(a, b))
    if not a:
        return lhs, 0
    n = len(a)
    rhs = a[-1] * partial[-1] - sum((a[i + 1] - a[i]) * partial[i] for i in range(n - 1))
    return lhs, rhs


def rearrangement_holds(x: Sequence[int], y: Sequence[int], permutation: Sequence[int]) -> bool:
    """For ascending ``x`` and ``y``: the reversed pairing is the smallest of all pairings."""

    n = len(x)
    reversed_sum = sum(x[i] * y[n - 1 - i] for i in range(n))
    permuted_sum = sum(x[i] * y[permutation[i]] for i in range(n))
    return reversed_sum <= permuted_sum


def _format_sequence(values: Sequence[int]) -> str:
    return "(" + ",".join(str(value) for value in values) + ")"


__all__ = [
    "conjugate",
    "gale_ryser_feasible",
    "improvement_step",
    "is_non_increasing",
    "non_increasing_sequences",
    "order_functional",
    "rearrangement_holds",
    "staircase",
    "summation_by_parts",
    "verify_sequence_lemma",
]
