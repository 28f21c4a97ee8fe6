import pytest

from acr_workbench.errors import CapExceededError, InvalidParameterError
from acr_workbench.families import c2_counterexample_family, family_graphs
from acr_workbench.graphs.gadgets import degadgetise
from acr_workbench.graphs.orders import is_strict_linear_order


@pytest.mark.parametrize("L, c", [(1, 1), (1, 2), (2, 1)])
def test_family_pairs_are_equivalent_everywhere(L, c):
    g, h, report = c2_counterexample_family(L, c)
    assert report.passed
    assert report.order_size == 2 * (L * c + 1) + 1
    assert report.vertices == g.n == h.n == 3 * report.order_size
    assert report.edge_difference == 2
    assert report.failing_vertices == []


def test_family_h_hides_a_three_cycle():
    g, h = family_graphs(1, 1)
    assert is_strict_linear_order(degadgetise(g))
    assert not is_strict_linear_order(degadgetise(h))
    assert g.edge_count() == h.edge_count()


def test_family_parameters_are_checked():
    with pytest.raises(InvalidParameterError):
        c2_counterexample_family(0, 1)
    with pytest.raises(CapExceededError):
        c2_counterexample_family(3, 3)
    with pytest.raises(CapExceededError):
        c2_counterexample_family(2, 2, cap=3)
