from itertools import product

import pytest

from acr_workbench.bisim import (
    GlobalMode,
    bisimilar,
    c2_equivalent,
    c2_game_equivalent,
    c2_types,
    canonical_enumeration,
    class_table,
    ef_equivalent,
    graded_game_equivalent,
    graded_types,
    is_partial_isomorphism,
)
from acr_workbench.errors import CapExceededError, InvalidParameterError
from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.graphs.generators import make_strict_linear_order, random_graph


def test_grading_separates_out_degrees(order5):
    assert bisimilar(order5, 0, order5, 1, 1, 1)
    assert not bisimilar(order5, 0, order5, 4, 1, 1)
    assert not bisimilar(order5, 0, order5, 1, 1, 4)
    assert bisimilar(order5, 0, order5, 4, 0, 1)


def test_global_modes_compare_class_sizes(order5):
    order4 = make_strict_linear_order(4)
    assert bisimilar(order5, 0, order4, 0, 1, 1, GlobalMode.none())
    assert not bisimilar(order5, 0, order4, 0, 1, 1, GlobalMode.exact())
    assert bisimilar(order5, 0, order4, 0, 1, 1, GlobalMode.capped(3))
    assert not bisimilar(order5, 0, order4, 0, 1, 1, GlobalMode.capped(4))


def test_global_mode_parsing():
    assert GlobalMode.parse("none") == GlobalMode()
    assert GlobalMode.parse("exact") == GlobalMode.exact()
    assert GlobalMode.parse("capped:2") == GlobalMode.capped(2)
    assert GlobalMode.capped(2).describe() == "capped:2"
    for text in ("bogus", "capped:x", "capped:0"):
        with pytest.raises(InvalidParameterError):
            GlobalMode.parse(text)


def test_refinement_agrees_with_the_graded_game(rng):
    for _ in range(30):
        g1 = random_graph(rng.randint(1, 4), d=1, edge_prob=0.4, seed=rng)
        g2 = random_graph(rng.randint(1, 4), d=1, edge_prob=0.4, seed=rng)
        L, c = rng.randint(0, 2), rng.randint(1, 2)
        types = graded_types([g1, g2], L, c)
        for v1, v2 in product(g1.vertices, g2.vertices):
            assert bisimilar(g1, v1, g2, v2, L, c, assignment=types) == \
                graded_game_equivalent(g1, v1, g2, v2, L, c)


@pytest.mark.parametrize("respect_equality", [True, False])
def test_c2_refinement_agrees_with_the_pebble_game(rng, respect_equality):
    for _ in range(20):
        mode = rng.choice(["directed", "undirected"])
        g1 = random_graph(rng.randint(1, 4), edge_prob=0.5, mode=mode, seed=rng)
        g2 = random_graph(rng.randint(1, 4), edge_prob=0.5, mode=mode, seed=rng)
        L, c = rng.randint(0, 2), rng.randint(1, 2)
        types = c2_types([g1, g2], L, c, respect_equality)
        for v1, v2 in product(g1.vertices, g2.vertices):
            assert c2_equivalent(g1, v1, g2, v2, L, c, respect_equality, types) == \
                c2_game_equivalent(g1, v1, g2, v2, L, c, respect_equality)


def test_c2_round_zero_sees_self_loops():
    looped = FeaturedGraph.create(1, [(0, 0)])
    bare = FeaturedGraph.create(1, [])
    assert not c2_equivalent(looped, 0, bare, 0, 0, 1)
    assert not c2_game_equivalent(looped, 0, bare, 0, 0, 1)
    assert bisimilar(looped, 0, bare, 0, 0, 1)


def test_games_respect_the_vertex_cap(order5):
    with pytest.raises(CapExceededError):
        graded_game_equivalent(order5, 0, order5, 0, 1, 1, cap=4)


def test_ef_games_on_small_orders(cycle3):
    assert ef_equivalent(cycle3, (0,), cycle3, (1,), 2)
    assert ef_equivalent(make_strict_linear_order(3), (), make_strict_linear_order(4), (), 2)
    assert not ef_equivalent(make_strict_linear_order(1), (), make_strict_linear_order(2), (), 2)
    assert not is_partial_isomorphism(cycle3, (0, 1), cycle3, (1, 0))
    with pytest.raises(CapExceededError):
        ef_equivalent(cycle3, (), cycle3, (), 4)


def test_canonical_enumeration_starts_with_the_point(order5):
    assert canonical_enumeration(order5, 2, 0, 1) == {2: 1, 0: 2, 1: 3, 3: 4, 4: 5}
    numbering = canonical_enumeration(order5, 4, 1, 1)
    assert numbering[4] == 1
    assert sorted(numbering[v] for v in range(4)) == [1, 2, 3, 4]


def test_class_table(cycle3):
    assert class_table(graded_types([cycle3], 1, 1)) == [
        "round 0\tG1: 0 0 0",
        "round 1\tG1: 0 0 0",
    ]
