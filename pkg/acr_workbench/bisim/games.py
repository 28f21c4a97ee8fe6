"""Direct recursive search of the counting back-and-forth games.

Exponential in ``c``; used to cross-check the refinement algorithms on
small graphs.
"""
from __future__ import annotations

from itertools import combinations, permutations
from typing import Callable, Dict, Optional, Sequence, Tuple

from acr_workbench.errors import CapExceededError, InvalidParameterError
from acr_workbench.graphs.core import FeaturedGraph, ensure_compatible
from acr_workbench.utils.configuration import DEFAULT_LIMITS

Relation = Callable[[int, int], bool]


def _answers_every_challenge(
    challengers: Sequence[int],
    responders: Sequence[int],
    matches: Relation,
    c: int,
) -> bool:
    """Every set of at most ``c`` distinct challengers has distinct matching responders."""

    for size in range(1, min(c, len(challengers)) + 1):
        for challenge in combinations(challengers, size):
            if not any(all(matches(s, r) for s, r in zip(challenge, response))
                       for response in permutations(responders, size)):
                return False
    return True


def _check_inputs(g1: FeaturedGraph, g2: FeaturedGraph, L: int, c: int, cap: Optional[int]) -> None:
    ensure_compatible([g1, g2])
    if L < 0 or c < 1:
        raise InvalidParameterError("games need L >= 0 and c >= 1")
    limit = DEFAULT_LIMITS.game_vertices if cap is None else cap
    largest = max(g1.n, g2.n)
    if largest > limit:
        raise CapExceededError("game search vertices", largest, limit)


def graded_game_equivalent(
    g1: FeaturedGraph,
    v1: int,
    g2: FeaturedGraph,
    v2: int,
    L: int,
    c: int,
    cap: Optional[int] = None,
) -> bool:
    """Duplicator wins the ``L``-turn ``c``-graded game over out-neighbourhoods."""

    _check_inputs(g1, g2, L, c, cap)
    memo: Dict[Tuple[int, int, int], bool] = {}

    def related(a: int, b: int, turns: int) -> bool:
        key = (a, b, turns)
        if key not in memo:
            result = g1.features[a] == g2.features[b]
            if result and turns > 0:
                result = (
                    _answers_every_challenge(g1.adjacency[a], g2.adjacency[b],
                                             lambda s, r: related(s, r, turns - 1), c)
                    and _answers_every_challenge(g2.adjacency[b], g1.adjacency[a],
                                                 lambda r, s: related(s, r, turns - 1), c)
                )
            memo[key] = result
        return memo[key]

    return related(v1, v2, L)


def c2_game_equivalent(
    g1: FeaturedGraph,
    v1: int,
    g2: FeaturedGraph,
    v2: int,
    L: int,
    c: int,
    respect_equality: bool = True,
    cap: Optional[int] = None,
) -> bool:
    """Duplicator wins the ``L``-turn two-pebble ``c``-counting game.

    Challenges range over the whole vertex set; a response must match the
    challenge's adjacency to the pebbled vertex in both directions and,
    with ``respect_equality``, whether it is the pebbled vertex itself.
    Pebbled vertices must agree on features and on carrying a self-loop.
    """

    _check_inputs(g1, g2, L, c, cap)
    memo: Dict[Tuple[int, int, int], bool] = {}

    def pattern(graph: FeaturedGraph, pebble: int, u: int) -> Tuple[bool, bool, bool]:
        return graph.has_edge(pebble, u), graph.has_edge(u, pebble), respect_equality and u == pebble

    def related(a: int, b: int, turns: int) -> bool:
        key = (a, b, turns)
        if key not in memo:
            result = (g1.features[a], g1.has_edge(a, a)) == (g2.features[b], g2.has_edge(b, b))
            if result and turns > 0:
                def forth(s: int, r: int) -> bool:
                    return pattern(g1, a, s) == pattern(g2, b, r) and related(s, r, turns - 1)

                def back(r: int, s: int) -> bool:
                    return forth(s, r)

                result = (_answers_every_challenge(list(g1.vertices), list(g2.vertices), forth, c)
                          and _answers_every_challenge(list(g2.vertices), list(g1.vertices), back, c))
            memo[key] = result
        return memo[key]

    return related(v1, v2, L)


__all__ = ["c2_game_equivalent", "graded_game_equivalent"]
