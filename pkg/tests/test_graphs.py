import pytest

from acr_workbench.errors import CapExceededError, DimensionMismatchError, GraphFormatError, InvalidParameterError
from acr_workbench.graphs.core import FeaturedGraph, GraphMode, c_restrict, multiset_of
from acr_workbench.graphs.fgr import read_graph, write_graph
from acr_workbench.graphs.generators import enumerate_digraphs, graph_from_index, random_graph, relabel_randomly
from acr_workbench.graphs.isomorphism import find_isomorphism, isomorphic


def test_undirected_graph_is_symmetrised():
    graph = FeaturedGraph.create(3, [(0, 1)], mode=GraphMode.UNDIRECTED)
    assert graph.has_edge(1, 0)
    assert graph.edge_count() == 1
    assert graph.out_neighbours(1) == (0,)


def test_features_must_be_boolean_and_sized():
    with pytest.raises(InvalidParameterError):
        FeaturedGraph.create(2, [], features=[(0, 2), (1, 0)])
    with pytest.raises(DimensionMismatchError):
        FeaturedGraph.create(2, [], features=[(0, 1), (1,)])


def test_c_restrict_caps_multiplicities():
    capped = c_restrict(multiset_of("aaab"), 2)
    assert capped == multiset_of("aab")
    with pytest.raises(InvalidParameterError):
        c_restrict(multiset_of("a"), 0)


def test_write_graph_is_canonical():
    graph = FeaturedGraph.create(3, [(2, 0), (0, 1)], features=[(1,), (0,), (1,)])
    assert write_graph(graph) == "fgr 1\nmode directed\nn 3\nd 1\nf 0 1\nf 1 0\nf 2 1\ne 0 1\ne 2 0\n"
    assert read_graph(write_graph(graph)) == graph


def test_read_graph_reports_line_numbers():
    text = "fgr 1\nmode directed\nn 2\nd 0\n# comment\ne 0 5\n"
    with pytest.raises(GraphFormatError) as info:
        read_graph(text)
    assert info.value.line == 6


def test_read_graph_rejects_reversed_undirected_edge():
    with pytest.raises(GraphFormatError):
        read_graph("fgr 1\nmode undirected\nn 2\nd 0\ne 1 0\n")


def test_enumeration_counts_every_digraph_once():
    graphs = list(enumerate_digraphs(2))
    assert len(graphs) == 16
    assert len({graph.edges for graph in graphs}) == 16
    assert graph_from_index(2, 0, 1).edges == frozenset({(0, 0)})


def test_enumeration_respects_bit_cap():
    with pytest.raises(CapExceededError):
        list(enumerate_digraphs(5))


def test_random_graph_is_seed_reproducible():
    first = random_graph(6, d=1, edge_prob=0.4, seed=11)
    second = random_graph(6, d=1, edge_prob=0.4, seed=11)
    assert first == second


def test_random_graph_respects_out_degree_bound():
    graph = random_graph(8, edge_prob=0.9, seed=3, max_outdeg=2)
    assert all(len(neighbours) <= 2 for neighbours in graph.adjacency)


def test_relabelling_gives_isomorphic_graph(order5):
    relabelled, permutation = relabel_randomly(order5, seed=5)
    mapping = find_isomorphism(order5, relabelled)
    assert mapping is not None
    assert all(relabelled.has_edge(mapping[u], mapping[v]) for u, v in order5.edges)
    assert sorted(permutation) == list(range(5))


def test_isomorphism_respects_features(cycle3):
    marked = FeaturedGraph.create(3, cycle3.edges, features=[(1,), (0,), (0,)])
    other = FeaturedGraph.create(3, cycle3.edges, features=[(1,), (1,), (0,)])
    assert not isomorphic(marked, other)


def test_disjoint_union_shifts_second_graph(cycle3, g3):
    union = cycle3.disjoint_union(g3)
    assert union.n == 6
    assert union.has_edge(5, 5)
    assert union.has_edge(3, 4)
