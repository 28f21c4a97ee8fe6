import pytest

from acr_workbench.errors import DimensionMismatchError
from acr_workbench.graphs.core import FeaturedGraph, GraphMode
from acr_workbench.graphs.generators import enumerate_digraphs, make_edgeless, make_strict_linear_order
from acr_workbench.graphs.orders import characterization_holds, is_strict_linear_order, max_out_degree, order_counts


def test_named_graphs(order5, cycle3, g3):
    assert is_strict_linear_order(order5)
    assert not is_strict_linear_order(cycle3)
    assert not is_strict_linear_order(g3)
    assert is_strict_linear_order(make_edgeless(1))
    assert not is_strict_linear_order(make_edgeless(2))


def test_counts_characterise_orders_exhaustively():
    for n in range(1, 4):
        for graph in enumerate_digraphs(n):
            assert characterization_holds(graph) == is_strict_linear_order(graph)


def test_order_counts(order5):
    assert order_counts(order5) == {"edges": 10, "binomial_n_2": 10, "hom_p2": 10, "binomial_n_3": 10}


def test_cycle_has_right_edge_count_but_wrong_paths(cycle3):
    counts = order_counts(cycle3)
    assert counts["edges"] == counts["binomial_n_2"] == 3
    assert counts["hom_p2"] == 3
    assert counts["binomial_n_3"] == 1


def test_undirected_graphs_are_rejected():
    graph = FeaturedGraph.create(2, [(0, 1)], mode=GraphMode.UNDIRECTED)
    with pytest.raises(DimensionMismatchError):
        is_strict_linear_order(graph)


def test_max_out_degree():
    assert max_out_degree(make_strict_linear_order(6)) == 5
