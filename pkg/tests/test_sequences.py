import logging
from itertools import product
from math import comb

import pytest

from acr_workbench.errors import CapExceededError, InvalidParameterError
from acr_workbench.sequences import (
    conjugate,
    gale_ryser_feasible,
    improvement_step,
    non_increasing_sequences,
    order_functional,
    rearrangement_holds,
    staircase,
    summation_by_parts,
    verify_sequence_lemma,
)
from acr_workbench.suites.degree_sequences import gale_ryser_violations, realisable_margins


def test_conjugate():
    assert conjugate([3, 1, 1]) == [3, 1, 1]
    assert conjugate([2, 2, 0]) == [2, 2, 0]
    assert conjugate([4, 0], length=4) == [1, 1, 1, 1]


def test_staircase_attains_the_bound():
    for n in range(1, 8):
        assert order_functional(staircase(n)) == comb(n, 3)


def test_gale_ryser_examples():
    assert gale_ryser_feasible([2, 1, 0], [1, 1, 1])
    assert gale_ryser_feasible([3, 0, 0], [1, 1, 1])
    assert not gale_ryser_feasible([2, 0], [0, 2])
    assert not gale_ryser_feasible([1, 1], [2, 1])


def test_gale_ryser_matches_brute_force_on_small_margins():
    margins = realisable_margins(2)
    for rows in non_increasing_sequences(2, 2):
        for columns in [(0, 2), (1, 1), (2, 0)]:
            assert gale_ryser_feasible(rows, columns) == ((rows, columns) in margins)


def test_gale_ryser_sorts_unsorted_rows_against_brute_force(caplog):
    margins = realisable_margins(3)
    for rows in product(range(4), repeat=3):
        for columns in product(range(4), repeat=3):
            assert gale_ryser_feasible(rows, columns, warn=False) == ((rows, columns) in margins)
    with caplog.at_level(logging.WARNING, logger="acr_workbench.sequences"):
        assert gale_ryser_feasible([0, 1, 2], [1, 1, 1])
    assert "not non-increasing" in caplog.text


def test_sequence_suite_covers_every_margin_pair():
    checked, violations = gale_ryser_violations(2, 3)
    assert checked == 4 ** 2 * 4 ** 2
    assert violations == []


def test_sequence_lemma_holds_for_small_n():
    for n in range(1, 6):
        report = verify_sequence_lemma(n)
        assert report.passed
        assert report.bound == comb(n, 3)
        assert report.equality_witnesses == [staircase(n)]


def test_sequence_lemma_cap():
    with pytest.raises(CapExceededError):
        verify_sequence_lemma(7)


def test_improvement_step_lowers_the_functional():
    values = [2, 2, 2, 0]
    step = improvement_step(values)
    assert sum(step) == sum(values)
    assert order_functional(step) < order_functional(values)
    with pytest.raises(InvalidParameterError):
        improvement_step(staircase(4))


def test_identities():
    lhs, rhs = summation_by_parts([1, 4, 2], [3, -1, 5])
    assert lhs == rhs == 9
    assert rearrangement_holds([1, 2, 3], [1, 5, 6], [0, 1, 2])
