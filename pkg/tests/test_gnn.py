from fractions import Fraction
from math import comb

import pytest

from acr_workbench.errors import DimensionMismatchError, GraphFormatError, InvalidParameterError
from acr_workbench.families import family_graphs
from acr_workbench.graphs.gadgets import gadgetise
from acr_workbench.graphs.generators import make_directed_cycle, make_strict_linear_order, random_graph
from acr_workbench.gnn import (
    AggregationSpec,
    aggregation_ignores_excess,
    build_gadget_order_gnn,
    build_linear_order_gnn,
    compile_formula,
    describe,
    is_ac_gnn,
    is_simple,
    random_bounded_network,
    read_network,
    run,
    run_all,
    run_trace,
    to_simple,
    write_network,
)
from acr_workbench.logic.parser import parse_formula
from acr_workbench.logic.random_formulas import random_formula
from acr_workbench.logic.semantics import satisfying_vertices


def _expected(formula, graph):
    members = satisfying_vertices(formula, graph)
    return [int(v in members) for v in graph.vertices]


def test_linear_order_network_accepts_orders():
    net = build_linear_order_gnn()
    assert is_simple(net)
    assert net.depth == 6
    for n in range(1, 9):
        assert run_all(net, make_strict_linear_order(n)) == [1] * n


def test_linear_order_network_rejects_other_graphs(cycle3, g3):
    net = build_linear_order_gnn()
    assert run_all(net, cycle3) == [0, 0, 0]
    assert run_all(net, g3) == [0, 0, 0]


def test_linear_order_counts_after_four_layers(order5, cycle3):
    net = build_linear_order_gnn()
    assert run_trace(net, order5).at(4, 2) == (10, 10, 10, 10)
    assert run_trace(net, cycle3).at(4, 0) == (3, 3, 3, 1)


def test_network_input_dimension_is_checked(order5):
    net = compile_formula(parse_formula("p1"))
    with pytest.raises(DimensionMismatchError):
        run(net, order5, 0)


def test_compiled_networks_agree_with_the_evaluator():
    for index in range(40):
        d = index % 3
        formula = random_formula(index % 4, d, max_grading=3, seed=index)
        graph = random_graph(2 + index % 6, d=d, edge_prob=0.4,
                             mode="directed" if index % 2 else "undirected", seed=100 + index)
        net = compile_formula(formula, input_dim=d)
        expected = _expected(formula, graph)
        assert run_all(net, graph) == expected
        assert run_all(to_simple(net), graph) == expected
        assert aggregation_ignores_excess(net, graph)


def test_compiled_layers_follow_the_nesting_height():
    net = compile_formula(parse_formula("<>=2 (p1 & !p2)"))
    assert net.input_dim == 2
    assert net.depth == 1 + 3
    assert net.layers[0].aggregation == AggregationSpec.bounded(2)
    assert is_ac_gnn(net)
    assert not is_ac_gnn(compile_formula(parse_formula("E>=2 p1")))


def test_compile_rejects_small_input_dimension():
    with pytest.raises(InvalidParameterError):
        compile_formula(parse_formula("p3"), input_dim=2)


def test_gadget_order_network():
    net = build_gadget_order_gnn()
    assert is_simple(net)
    for n in range(1, 5):
        gadget = gadgetise(make_strict_linear_order(n))
        assert run_all(net, gadget) == [1] * gadget.n
    assert set(run_all(net, gadgetise(make_directed_cycle(3)))) == {0}
    _, h = family_graphs(1, 1)
    assert 0 in run_all(net, h)


def test_bounded_networks_ignore_excess_neighbours(order5):
    net = random_bounded_network(2, 0, 3, 2, seed=3)
    assert aggregation_ignores_excess(net, order5)
    info = describe(net)
    assert info["layers"] == 2
    assert info["widths"] == [3, 3]
    assert not info["simple"]


def test_network_text_round_trip(order5):
    net = build_linear_order_gnn()
    text = write_network(net)
    assert text.startswith("acr 1\nname linear-order\ninput 0\n")
    restored = read_network(text)
    assert write_network(restored) == text
    assert run_all(restored, order5) == [1] * 5


def test_network_text_keeps_exact_rationals():
    text = "acr 1\ninput 1\nlayer relu sum zero\nA 1/3\nC 0\nR 0\nb -1/6\nclassifier ge 1/6\nw 1\n"
    net = read_network(text)
    assert net.layers[0].bias == (Fraction(-1, 6),)
    assert net.classifier.threshold == Fraction(1, 6)


def test_network_text_errors_carry_line_numbers():
    with pytest.raises(GraphFormatError) as info:
        read_network("acr 1\ninput 0\nlayer relu max sum\nb 1\nclassifier ge 1\nw 1\n")
    assert info.value.line == 3
    with pytest.raises(GraphFormatError):
        read_network("acr 2\n")


def test_order_counts_match_binomials():
    net = build_linear_order_gnn()
    for n in range(3, 7):
        vector = run_trace(net, make_strict_linear_order(n)).at(4, 0)
        assert vector == (comb(n, 2), comb(n, 2), comb(n, 3), comb(n, 3))
