import pytest

from acr_workbench.errors import DimensionMismatchError, FormulaSyntaxError, InvalidParameterError
from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.logic.parser import parse_formula
from acr_workbench.logic.random_formulas import random_formula
from acr_workbench.logic.semantics import build_degree_bound_formula, evaluate, satisfying_vertices
from acr_workbench.logic.syntax import TOP, And, Diamond, GlobalExists, Not, Prop, stats, subformulas, to_text


def test_parse_builds_the_expected_tree():
    formula = parse_formula("(p1 & <>=2 !p2)")
    assert formula == And(Prop(1), Diamond(2, Not(Prop(2))))
    assert parse_formula("E>=3 T") == GlobalExists(3, TOP)


def test_disjunction_is_sugar():
    assert parse_formula("(p1 | p2)") == Not(And(Not(Prop(1)), Not(Prop(2))))


def test_printing_round_trips_through_the_parser():
    text = "(<>=1 (p1 & !T) & E>=2 <>=3 p2)"
    formula = parse_formula(text)
    assert to_text(formula) == text
    assert parse_formula(to_text(formula)) == formula


def test_syntax_errors_carry_a_position():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula("p1 @ p2")
    assert info.value.position == 3


@pytest.mark.parametrize("text", ["<>=0 T", "E>=0 p1", "p0"])
def test_zero_gradings_and_indices_are_rejected(text):
    with pytest.raises(FormulaSyntaxError):
        parse_formula(text)


def test_constructors_validate_gradings():
    with pytest.raises(InvalidParameterError):
        Diamond(0, TOP)


def test_stats():
    info = stats(parse_formula("(<>=2 <>=1 p1 & E>=4 p3)"))
    assert info.modal_depth == 2
    assert info.max_grading == 2
    assert info.max_global_grading == 4
    assert info.uses_global
    assert info.max_prop == 3


def test_subformulas_are_shared():
    formula = parse_formula("(<>=1 p1 & <>=1 p1)")
    assert len(subformulas(formula)) == 3
    assert subformulas(formula)[-1] == formula


def test_evaluation_counts_out_neighbours():
    graph = FeaturedGraph.create(4, [(0, 1), (0, 2), (0, 3), (1, 2)], features=[(0,), (1,), (1,), (0,)])
    assert evaluate(parse_formula("<>=2 p1"), graph, 0)
    assert not evaluate(parse_formula("<>=3 p1"), graph, 0)
    assert satisfying_vertices(parse_formula("<>=1 p1"), graph) == frozenset({0, 1})
    assert satisfying_vertices(parse_formula("E>=2 p1"), graph) == frozenset(range(4))
    assert satisfying_vertices(parse_formula("E>=3 p1"), graph) == frozenset()


def test_evaluation_checks_dimensions(order5):
    with pytest.raises(DimensionMismatchError):
        evaluate(Prop(1), order5, 0)
    with pytest.raises(InvalidParameterError):
        evaluate(TOP, order5, 5)


def test_degree_bound_formula(order5, cycle3):
    assert satisfying_vertices(build_degree_bound_formula(1), cycle3) == frozenset(range(3))
    assert satisfying_vertices(build_degree_bound_formula(3), order5) == frozenset()
    assert satisfying_vertices(build_degree_bound_formula(4), order5) == frozenset(range(5))


def test_random_formulas_are_reproducible():
    first = random_formula(2, 2, seed=11)
    assert first == random_formula(2, 2, seed=11)
    info = stats(first)
    assert info.modal_depth <= 2
    assert info.max_prop <= 2
    assert info.max_grading is None or info.max_grading <= 3
    assert not stats(random_formula(3, 1, allow_global=False, seed=5)).uses_global
