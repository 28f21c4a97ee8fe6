from math import comb

import pytest

from acr_workbench.errors import CapExceededError
from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.graphs.generators import make_strict_linear_order, random_graph
from acr_workbench.graphs.homcount import count_homomorphisms, count_p2, make_p2


def test_p2_into_loop_and_two_cycle(g3):
    assert count_homomorphisms(make_p2(), g3) == 3
    assert count_p2(g3) == 3


def test_p2_count_of_orders_is_binomial():
    for n in range(1, 9):
        assert count_p2(make_strict_linear_order(n)) == comb(n, 3)


def test_closed_form_matches_search(rng):
    for _ in range(30):
        graph = random_graph(rng.randint(1, 6), edge_prob=rng.random(), seed=rng)
        assert count_homomorphisms(make_p2(), graph) == count_p2(graph)


def test_homomorphisms_preserve_features():
    pattern = FeaturedGraph.create(2, [(0, 1)], features=[(1,), (0,)])
    target = FeaturedGraph.create(3, [(0, 1), (1, 2), (2, 0)], features=[(1,), (1,), (0,)])
    assert count_homomorphisms(pattern, target) == 1


def test_pattern_cap():
    big = make_strict_linear_order(7)
    with pytest.raises(CapExceededError):
        count_homomorphisms(big, big)
