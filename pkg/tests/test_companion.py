from itertools import product

import pytest

from acr_workbench.bisim import ef_equivalent
from acr_workbench.companion import (
    certify,
    chi_formula,
    ef_agreement,
    free_edge_transfer,
    free_witness,
    gamma_formula,
    homogenise,
    initial_good_graph,
    property_formula,
    saturate,
    strip_global,
)
from acr_workbench.errors import InvalidParameterError, PreconditionError
from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.graphs.generators import make_strict_linear_order, random_graph
from acr_workbench.logic.semantics import satisfying_vertices


def test_saturate_is_certified_and_idempotent(order5, rng):
    result, report = saturate(order5, 0, 1, 1)
    assert report.valid
    assert saturate(result, 0, 1, 1)[0] == result
    for _ in range(10):
        graph = random_graph(rng.randint(2, 7), d=1, edge_prob=0.4, seed=rng)
        companion, report = saturate(graph, 0, rng.randint(1, 2), rng.randint(1, 2))
        assert report.valid, report.failed_vertices()
        assert companion.n == graph.n


def test_initial_good_graph_keeps_every_type(rng):
    graph = random_graph(6, d=1, edge_prob=0.5, seed=rng)
    _, report = initial_good_graph(graph, 2, 2, 1)
    assert report.valid
    assert set(report.conditions) == {"condition 2", "condition 3"}


def test_free_edge_transfer(cycle3):
    result, report = free_edge_transfer(cycle3, 0, 1, 2, 1, 1)
    assert result.edges == frozenset({(0, 2), (1, 2), (2, 0)})
    assert report.operations == ["remove 0->1", "add 0->2"]
    assert all(report.certificate)


def test_free_edge_transfer_reports_failed_preconditions(order5):
    with pytest.raises(PreconditionError) as info:
        free_edge_transfer(order5, 0, 1, 2, 1, 1)
    assert info.value.clauses == ["(0, 2) is already an edge"]


def test_free_witness(cycle3):
    result, report = free_witness(cycle3, 0, [1], 2, 1, 1)
    assert result.has_edge(0, 2)
    assert report.valid
    with pytest.raises(PreconditionError):
        free_witness(cycle3, 0, [1], 2, 1, 2)


def test_surgery_needs_directed_graphs():
    undirected = FeaturedGraph.create(3, [(0, 1)], mode="undirected")
    with pytest.raises(InvalidParameterError):
        saturate(undirected, 0, 1, 1)


def test_homogenise_against_a_copy(order5):
    relabelled = order5.relabel([2, 0, 4, 1, 3])
    result, report = homogenise(order5, 0, relabelled, 2, 1, 1, 1)
    assert report.valid
    assert all(certify(relabelled, result, 1, 1))


def _complete_with_loops(n):
    return FeaturedGraph.create(n, product(range(n), repeat=2))


@pytest.mark.parametrize("L, c", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_homogenising_a_graph_against_itself_saturates_it(rng, L, c):
    for _ in range(10):
        graph = random_graph(rng.randint(1, 7), d=1, edge_prob=rng.random(), seed=rng)
        v = rng.randrange(graph.n)
        saturated, _ = saturate(graph, v, L, c)
        result, report = homogenise(graph, v, graph, v, L, c, c, saturated1=saturated)
        assert result == saturated
        assert report.valid


def test_homogenise_plays_the_ef_game_with_the_point_pebbled():
    single, triple = _complete_with_loops(1), _complete_with_loops(3)
    result, report = homogenise(single, 0, triple, 2, 1, 1, 1)
    assert report.conditions["EF agreement"]
    assert report.valid
    # one more round needs an unpebbled partner in the single-vertex graph
    assert not ef_equivalent(single, (0,), result, (2,), 1)
    with pytest.raises(PreconditionError):
        homogenise(single, 0, triple, 2, 1, 1, 2)

    pair = _complete_with_loops(2)
    result, report = homogenise(pair, 0, triple, 1, 1, 1, 2)
    assert report.valid
    assert report.conditions["EF agreement"]
    assert ef_agreement(pair, 0, result, 1, 1, 2)
    assert ef_equivalent(pair, (0,), result, (1,), 1)


def test_homogenise_on_independent_bisimilar_graphs(rng):
    decided = 0
    for _ in range(60):
        L, q_prime = rng.randint(1, 2), rng.randint(1, 3)
        g1 = random_graph(rng.randint(1, 4), edge_prob=rng.random(), seed=rng)
        g2 = random_graph(rng.randint(1, 6), edge_prob=rng.random(), seed=rng)
        v1 = rng.randrange(g1.n)
        for v2 in g2.vertices:
            try:
                result, report = homogenise(g1, v1, g2, v2, L, 1, q_prime)
            except PreconditionError:
                continue
            assert report.valid, (sorted(g1.edges), v1, sorted(g2.edges), v2, report.conditions)
            assert all(certify(g2, result, L, 1))
            hat1, _ = saturate(g1, v1, L, 1)
            assert ef_equivalent(hat1, (v1,), result, (v2,), min(q_prime - 1, 2))
            decided += 1
    assert decided > 0


def test_ef_agreement_is_only_decided_for_c_one(order5):
    assert ef_agreement(order5, 0, order5, 0, 2, 3) is None
    assert ef_agreement(order5, 0, order5, 0, 1, 3)


def test_homogenise_needs_q_prime_at_least_c(order5):
    with pytest.raises(PreconditionError):
        homogenise(order5, 0, order5, 0, 1, 2, 1)


def test_characteristic_formulas(order5):
    chi = chi_formula(order5, 0, 1, 1)
    assert satisfying_vertices(chi, order5) == frozenset({0, 1, 2, 3})
    gamma = gamma_formula(order5, 0, 1, 1, 1)
    assert strip_global(gamma) == chi
    order4 = make_strict_linear_order(4)
    assert 0 in satisfying_vertices(gamma, order4)
    assert 0 not in satisfying_vertices(gamma_formula(order5, 0, 1, 1, 4), order4)


def test_property_formula(order5):
    formula, result = property_formula([(order5, 0, True), (order5, 4, False)], 1, 1, 1)
    assert result.consistent
    assert result.disjuncts == 1
    assert satisfying_vertices(formula, order5) == frozenset({0, 1, 2, 3})

    formula, result = property_formula([(order5, 0, True), (order5, 1, False)], 1, 1, 1)
    assert formula is None
    assert not result.consistent
    assert (result.positive_index, result.negative_index) == (0, 1)
