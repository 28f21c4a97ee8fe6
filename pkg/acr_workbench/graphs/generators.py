"""Deterministic graph constructors, exhaustive enumeration and seeded sampling."""
from __future__ import annotations

import logging
import random
from itertools import combinations_with_replacement
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from acr_workbench.errors import CapExceededError, InvalidParameterError
from acr_workbench.graphs.core import Edge, FeaturedGraph, GraphMode
from acr_workbench.utils.configuration import DEFAULT_LIMITS

logger = logging.getLogger(__name__)

SeedLike = int | random.Random | None


def make_rng(seed: SeedLike) -> random.Random:
    """Return ``seed`` itself when it already is a generator."""

    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def make_strict_linear_order(n: int) -> FeaturedGraph:
    """Directed graph with edges ``(i, j)`` for every ``i < j``."""

    if n < 1:
        raise InvalidParameterError("a strict linear order needs n >= 1")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return FeaturedGraph.create(n, edges)


def make_directed_cycle(n: int) -> FeaturedGraph:
    if n < 1:
        raise InvalidParameterError("a cycle needs n >= 1")
    return FeaturedGraph.create(n, [(i, (i + 1) % n) for i in range(n)])


def make_edgeless(n: int, d: int = 0, mode: GraphMode | str = GraphMode.DIRECTED) -> FeaturedGraph:
    if n < 1:
        raise InvalidParameterError("an edgeless graph needs n >= 1")
    return FeaturedGraph.create(n, (), d=d, mode=mode)


def make_complete_digraph(n: int, loops: bool = True) -> FeaturedGraph:
    edges = [(i, j) for i in range(n) for j in range(n) if loops or i != j]
    return FeaturedGraph.create(n, edges)


def make_loop_and_two_cycle() -> FeaturedGraph:
    """Three vertices: a directed 2-cycle on 0, 1 and a self-loop on 2."""

    return FeaturedGraph.create(3, [(0, 1), (1, 0), (2, 2)])


def enumeration_size(n: int, d: int) -> int:
    return 2 ** (n * n + n * d)


def graph_from_index(n: int, d: int, index: int) -> FeaturedGraph:
    """The ``index``-th digraph of the canonical enumeration.

    Edge masks form the outer loop and feature masks the inner one, i.e.
    ``index = edge_mask * 2**(n*d) + feature_mask``. Bit ``k`` of the edge
    mask is the pair ``(k // n, k % n)``; bit ``v*d + j`` of the feature mask
    is feature ``j`` of vertex ``v`` (little-endian in both).
    """

    feature_bits = n * d
    edge_mask, feature_mask = divmod(index, 1 << feature_bits)
    edges = [divmod(k, n) for k in range(n * n) if edge_mask >> k & 1]
    features = [
        tuple(feature_mask >> (v * d + j) & 1 for j in range(d)) for v in range(n)
    ]
    return FeaturedGraph.create(n, edges, features, d=d)


def enumerate_digraphs(
    n: int,
    d: int = 0,
    start: int = 0,
    stop: Optional[int] = None,
    bit_cap: Optional[int] = None,
) -> Iterator[FeaturedGraph]:
    """Yield every featured digraph on ``n`` vertices exactly once.

    ``start``/``stop`` select an index range so harnesses can shard.
    """

    if n < 1 or d < 0:
        raise InvalidParameterError("enumeration needs n >= 1 and d >= 0")
    cap = bit_cap if bit_cap is not None else DEFAULT_LIMITS.enumeration_bits
    bits = n * n + n * d
    if bits > cap:
        raise CapExceededError("enumeration bits n*n + n*d", bits, cap)
    total = enumeration_size(n, d)
    end = total if stop is None else min(stop, total)
    for index in range(start, end):
        yield graph_from_index(n, d, index)


def random_graph(
    n: int,
    d: int = 0,
    edge_prob: float = 0.5,
    mode: GraphMode | str = GraphMode.DIRECTED,
    seed: SeedLike = None,
    max_outdeg: Optional[int] = None,
    loops: bool = True,
) -> FeaturedGraph:
    """Seeded Erdős–Rényi style sample with optional out-degree bound."""

    if not 0.0 <= edge_prob <= 1.0:
        raise InvalidParameterError(f"edge probability {edge_prob} outside [0, 1]")
    if max_outdeg is not None and max_outdeg < 0:
        raise InvalidParameterError("max_outdeg must be non-negative")
    mode = GraphMode(mode)
    rng = make_rng(seed)
    features = [tuple(rng.randint(0, 1) for _ in range(d)) for _ in range(n)]
    edges: Set[Edge] = set()
    if mode is GraphMode.DIRECTED:
        for u in range(n):
            targets = [v for v in range(n) if (loops or u != v) and rng.random() < edge_prob]
            if max_outdeg is not None and len(targets) > max_outdeg:
                targets = sorted(rng.sample(targets, max_outdeg))
            edges.update((u, v) for v in targets)
    else:
        degree = [0] * n
        pairs: List[Tuple[int, int]] = [
            (u, v) for u, v in combinations_with_replacement(range(n), 2) if loops or u != v
        ]
        rng.shuffle(pairs)
        for u, v in pairs:
            if rng.random() >= edge_prob:
                continue
            if max_outdeg is not None:
                if degree[u] >= max_outdeg or degree[v] >= max_outdeg:
                    continue
            edges.add((u, v))
            degree[u] += 1
            if u != v:
                degree[v] += 1
    return FeaturedGraph.create(n, edges, features, d=d, mode=mode)


def random_permutation(n: int, seed: SeedLike = None) -> List[int]:
    rng = make_rng(seed)
    permutation = list(range(n))
    rng.shuffle(permutation)
    return permutation


def relabel_randomly(graph: FeaturedGraph, seed: SeedLike = None) -> Tuple[FeaturedGraph, Sequence[int]]:
    permutation = random_permutation(graph.n, seed)
    return graph.relabel(permutation), permutation


__all__ = [
    "enumerate_digraphs",
    "enumeration_size",
    "graph_from_index",
    "make_complete_digraph",
    "make_directed_cycle",
    "make_edgeless",
    "make_loop_and_two_cycle",
    "make_rng",
    "make_strict_linear_order",
    "random_graph",
    "random_permutation",
    "relabel_randomly",
]
