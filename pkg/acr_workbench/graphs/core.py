"""Featured graphs and multisets, the universe every other module works over."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from acr_workbench.errors import DimensionMismatchError, InvalidParameterError

FeatureVector = Tuple[int, ...]
Edge = Tuple[int, int]
Multiset = Counter


class GraphMode(str, Enum):
    DIRECTED = "directed"
    UNDIRECTED = "undirected"


@dataclass(frozen=True)
class FeaturedGraph:
    """Immutable graph on vertices ``0..n-1`` with a 0/1 feature vector per vertex.

    Undirected graphs are stored as symmetric sets of ordered pairs, so
    ``out_neighbours`` and ``in_neighbours`` coincide in that mode.
    """

    mode: GraphMode
    n: int
    d: int
    edges: FrozenSet[Edge]
    features: Tuple[FeatureVector, ...]
    _out: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _in: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameterError("a featured graph needs at least one vertex")
        if self.d < 0:
            raise InvalidParameterError("feature dimension must be non-negative")
        if len(self.features) != self.n:
            raise InvalidParameterError(
                f"expected {self.n} feature vectors, got {len(self.features)}")
        for vertex, vector in enumerate(self.features):
            if len(vector) != self.d:
                raise DimensionMismatchError(
                    f"vertex {vertex} has a feature vector of length {len(vector)}, expected {self.d}")
            if any(bit not in (0, 1) for bit in vector):
                raise InvalidParameterError(f"vertex {vertex} has a non-boolean feature")
        out_lists: List[List[int]] = [[] for _ in range(self.n)]
        in_lists: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidParameterError(f"edge ({u}, {v}) is out of range for n={self.n}")
            out_lists[u].append(v)
            in_lists[v].append(u)
        if self.mode is GraphMode.UNDIRECTED:
            for u, v in self.edges:
                if (v, u) not in self.edges:
                    raise InvalidParameterError(
                        f"undirected graph is missing the reverse of edge ({u}, {v})")
        object.__setattr__(self, "_out", tuple(tuple(sorted(items)) for items in out_lists))
        object.__setattr__(self, "_in", tuple(tuple(sorted(items)) for items in in_lists))

    @classmethod
    def create(
        cls,
        n: int,
        edges: Iterable[Edge] = (),
        features: Optional[Sequence[Sequence[int]]] = None,
        d: int = 0,
        mode: GraphMode | str = GraphMode.DIRECTED,
    ) -> "FeaturedGraph":
        """Build a graph, symmetrising the edge list in undirected mode."""

        mode = GraphMode(mode)
        edge_set = {(int(u), int(v)) for u, v in edges}
        if mode is GraphMode.UNDIRECTED:
            edge_set |= {(v, u) for u, v in edge_set}
        if features is None:
            vectors = tuple(tuple([0] * d) for _ in range(n))
        else:
            vectors = tuple(tuple(int(bit) for bit in vector) for vector in features)
            if vectors:
                d = len(vectors[0])
        return cls(mode=mode, n=n, d=d, edges=frozenset(edge_set), features=vectors)

    @property
    def directed(self) -> bool:
        return self.mode is GraphMode.DIRECTED

    @property
    def vertices(self) -> range:
        return range(self.n)

    def out_neighbours(self, v: int) -> Tuple[int, ...]:
        self._check_vertex(v)
        return self._out[v]

    def in_neighbours(self, v: int) -> Tuple[int, ...]:
        self._check_vertex(v)
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbours(v))

    def in_degree(self, v: int) -> int:
        return len(self.in_neighbours(v))

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def feature(self, v: int) -> FeatureVector:
        self._check_vertex(v)
        return self.features[v]

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        return self._out

    def edge_count(self) -> int:
        """Number of edges; unordered pairs in undirected mode."""

        if self.directed:
            return len(self.edges)
        loops = sum(1 for u, v in self.edges if u == v)
        return (len(self.edges) - loops) // 2 + loops

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def with_edges(self, edges: Iterable[Edge]) -> "FeaturedGraph":
        """Same vertices and features with a replaced edge set."""

        return FeaturedGraph.create(self.n, edges, self.features, d=self.d, mode=self.mode)

    def relabel(self, permutation: Sequence[int]) -> "FeaturedGraph":
        """Image of the graph under ``v -> permutation[v]``."""

        if sorted(permutation) != list(range(self.n)):
            raise InvalidParameterError("relabelling must be a permutation of the vertices")
        features: List[FeatureVector] = [()] * self.n
        for v in range(self.n):
            features[permutation[v]] = self.features[v]
        edges = {(permutation[u], permutation[v]) for u, v in self.edges}
        return FeaturedGraph(mode=self.mode, n=self.n, d=self.d,
                             edges=frozenset(edges), features=tuple(features))

    def disjoint_union(self, other: "FeaturedGraph") -> "FeaturedGraph":
        """Union with ``other`` shifted to vertices ``n..n+other.n-1``."""

        ensure_compatible([self, other])
        shift = self.n
        edges = set(self.edges) | {(u + shift, v + shift) for u, v in other.edges}
        return FeaturedGraph(mode=self.mode, n=self.n + other.n, d=self.d,
                             edges=frozenset(edges), features=self.features + other.features)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidParameterError(f"vertex {v} is out of range for n={self.n}")


def neighbourhoods(graph: FeaturedGraph, v: int) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Return the out- and in-neighbourhood of ``v``."""

    return frozenset(graph.out_neighbours(v)), frozenset(graph.in_neighbours(v))


def c_restrict(multiset: Multiset, c: int) -> Multiset:
    """Cap every multiplicity of ``multiset`` at ``c``."""

    if c < 1:
        raise InvalidParameterError("c-restriction needs c >= 1")
    return Counter({element: min(count, c) for element, count in multiset.items() if count > 0})


def multiset_of(items: Iterable[Hashable]) -> Multiset:
    return Counter(items)


def ensure_compatible(graphs: Sequence[FeaturedGraph]) -> None:
    """Raise unless all graphs share mode and feature dimension."""

    if not graphs:
        return
    first = graphs[0]
    for graph in graphs[1:]:
        if graph.mode is not first.mode:
            raise DimensionMismatchError(
                f"mode mismatch: {first.mode.value} vs {graph.mode.value}")
        if graph.d != first.d:
            raise DimensionMismatchError(f"feature dimension mismatch: {first.d} vs {graph.d}")


__all__ = [
    "Edge",
    "FeatureVector",
    "FeaturedGraph",
    "GraphMode",
    "Multiset",
    "c_restrict",
    "ensure_compatible",
    "multiset_of",
    "neighbourhoods",
]
