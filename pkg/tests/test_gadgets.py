import pytest

from acr_workbench.errors import DimensionMismatchError, NotAGadgetisationError
from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.graphs.gadgets import (
    BOTH_FEATURE,
    degadgetise,
    gadget_violation,
    gadgetise,
    identity_vertex,
    is_gadget_of_strict_linear_order,
    is_gadgetisation,
    signed_sink,
    signed_source,
    sink_vertex,
    source_vertex,
)
from acr_workbench.graphs.generators import make_strict_linear_order, random_graph
from acr_workbench.graphs.homcount import count_gadget_p2, count_p2
from acr_workbench.graphs.isomorphism import isomorphic


def test_gadget_layout(order5):
    gadget = gadgetise(order5)
    assert gadget.n == 15
    assert not gadget.directed
    assert gadget.edge_count() == len(order5.edges) + 2 * order5.n
    assert gadget.has_edge(source_vertex(0), sink_vertex(1))
    assert gadget.has_edge(identity_vertex(2), source_vertex(2))


def test_round_trip_and_p2_counts(rng):
    for _ in range(25):
        graph = random_graph(rng.randint(1, 6), edge_prob=rng.random(), seed=rng)
        gadget = gadgetise(graph)
        assert is_gadgetisation(gadget)
        assert isomorphic(degadgetise(gadget), graph)
        assert count_gadget_p2(gadget) == count_p2(graph)


def test_gadgetise_needs_plain_digraph():
    with pytest.raises(DimensionMismatchError):
        gadgetise(FeaturedGraph.create(2, [(0, 1)], features=[(1,), (0,)]))


def test_violations_name_their_clause(order5):
    gadget = gadgetise(order5)
    features = list(gadget.features)
    features[0] = BOTH_FEATURE
    doubled = FeaturedGraph.create(gadget.n, gadget.edges, features, d=2, mode=gadget.mode)
    assert gadget_violation(doubled)[0] == "psi1"

    source_edge = gadget.with_edges(set(gadget.edges) | {(source_vertex(0), source_vertex(1))})
    assert gadget_violation(source_edge)[0] == "psi2"

    missing = (source_vertex(3), identity_vertex(3))
    loose = gadget.with_edges(set(gadget.edges) - {missing, missing[::-1]})
    assert gadget_violation(loose)[0] == "psi3"
    with pytest.raises(NotAGadgetisationError) as info:
        degadgetise(loose)
    assert info.value.clause == "psi3"


def test_order_gadget_predicate(cycle3):
    assert all(is_gadget_of_strict_linear_order(gadgetise(make_strict_linear_order(n))) for n in range(1, 12))
    assert not is_gadget_of_strict_linear_order(gadgetise(cycle3))
    assert not is_gadget_of_strict_linear_order(make_strict_linear_order(3))


def test_signed_indices():
    assert signed_source(-2, 2) == source_vertex(0)
    assert signed_sink(2, 2) == sink_vertex(4)
    with pytest.raises(ValueError):
        signed_source(3, 2)
