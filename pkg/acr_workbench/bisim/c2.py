"""Two-pebble counting back-and-forth equivalence by refinement.

The round-``k + 1`` signature of a pebbled vertex ``v`` counts, capped at
``c``, the vertices ``u`` of its own graph per bucket
``(round-k class of u, (v, u) in E, (u, v) in E, u == v)``. Round 0 sees the
features and the self-loop atom ``E(x, x)``. In undirected mode the two
adjacency flags coincide. Without ``respect_equality`` the last component
is dropped, which is the literal reading of the definition.
"""
from __future__ import annotations

from collections import Counter
from typing import List, Optional, Sequence

from acr_workbench.bisim.refinement import TypeAssignment, rank_signatures
from acr_workbench.errors import InvalidParameterError
from acr_workbench.graphs.core import FeaturedGraph, ensure_compatible


def c2_types(graphs: Sequence[FeaturedGraph], L: int, c: int, respect_equality: bool = True) -> TypeAssignment:
    if L < 0 or c < 1:
        raise InvalidParameterError("c2 refinement needs L >= 0 and c >= 1")
    ensure_compatible(graphs)
    blocks: List[range] = []
    atoms = []
    start = 0
    for graph in graphs:
        blocks.append(range(start, start + graph.n))
        atoms.extend((graph.features[v], graph.has_edge(v, v)) for v in graph.vertices)
        start += graph.n

    current = rank_signatures(atoms)
    rounds = [current]
    for _ in range(L):
        signatures = []
        for graph, block in zip(graphs, blocks):
            offset = block.start
            for v in graph.vertices:
                buckets: Counter = Counter()
                for u in graph.vertices:
                    key = (
                        current[offset + u],
                        graph.has_edge(v, u),
                        graph.has_edge(u, v),
                        respect_equality and u == v,
                    )
                    buckets[key] += 1
                capped = tuple(sorted((key, min(count, c)) for key, count in buckets.items()))
                signatures.append((current[offset + v], capped))
        current = rank_signatures(signatures)
        rounds.append(current)
    return TypeAssignment(tuple(graph.n for graph in graphs), tuple(rounds), c)


def c2_equivalent(
    g1: FeaturedGraph,
    v1: int,
    g2: FeaturedGraph,
    v2: int,
    L: int,
    c: int,
    respect_equality: bool = True,
    assignment: Optional[TypeAssignment] = None,
) -> bool:
    types = assignment or c2_types([g1, g2], L, c, respect_equality)
    return types.label(0, v1) == types.label(1, v2)


__all__ = ["c2_equivalent", "c2_types"]
