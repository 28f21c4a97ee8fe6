"""The two-pebble counting counterexample family.

``G`` is the gadgetisation of the strict linear order on ``2n + 1`` elements,
``n = L*c + 1``, with elements indexed ``-n..n``. ``H`` swaps the single
gadget edge ``{s_-1, t_1}`` for ``{s_1, t_-1}``, which turns the underlying
digraph into one with a 3-cycle. Both graphs live on the same vertex set and
every vertex is two-pebble ``(L, c)``-equivalent to itself across them.
"""
from __future__ import annotations

import logging
from typing import FrozenSet, Optional, Set, Tuple

from acr_workbench.bisim.c2 import c2_types
from acr_workbench.errors import CapExceededError, InvalidParameterError
from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.graphs.gadgets import gadgetise, is_gadget_of_strict_linear_order, signed_sink, signed_source
from acr_workbench.graphs.generators import make_strict_linear_order
from acr_workbench.models import FamilyReport
from acr_workbench.utils.configuration import DEFAULT_LIMITS

logger = logging.getLogger(__name__)


def _unordered(graph: FeaturedGraph) -> Set[FrozenSet[int]]:
    return {frozenset(edge) for edge in graph.edges}


def family_graphs(L: int, c: int) -> Tuple[FeaturedGraph, FeaturedGraph]:
    n = L * c + 1
    g = gadgetise(make_strict_linear_order(2 * n + 1))
    removed = (signed_source(-1, n), signed_sink(1, n))
    added = (signed_source(1, n), signed_sink(-1, n))
    edges = set(g.edges)
    edges.discard(removed)
    edges.discard(removed[::-1])
    edges.add(added)
    return g, g.with_edges(edges)


def c2_counterexample_family(
    L: int,
    c: int,
    cap: Optional[int] = None,
    respect_equality: bool = True,
) -> Tuple[FeaturedGraph, FeaturedGraph, FamilyReport]:
    """Build the pair and certify it; the report lists any vertex that fails."""

    if L < 1 or c < 1:
        raise InvalidParameterError("the family needs L >= 1 and c >= 1")
    limit = DEFAULT_LIMITS.family_product if cap is None else cap
    if L * c > limit:
        raise CapExceededError("family L*c", L * c, limit)

    g, h = family_graphs(L, c)
    types = c2_types([g, h], L, c, respect_equality)
    failing = [v for v in g.vertices if types.label(0, v) != types.label(1, v)]
    if failing:
        logger.warning("family (L=%d, c=%d): %d vertices are not equivalent", L, c, len(failing))

    report = FamilyReport(
        L=L,
        c=c,
        order_size=2 * (L * c + 1) + 1,
        vertices=g.n,
        edge_difference=len(_unordered(g) ^ _unordered(h)),
        g_is_order_gadget=is_gadget_of_strict_linear_order(g),
        h_is_order_gadget=is_gadget_of_strict_linear_order(h),
        equivalent_vertices=g.n - len(failing),
        failing_vertices=failing,
    )
    logger.info("family (L=%d, c=%d) on %d vertices, passed=%s", L, c, g.n, report.passed)
    return g, h, report


__all__ = ["c2_counterexample_family", "family_graphs"]
