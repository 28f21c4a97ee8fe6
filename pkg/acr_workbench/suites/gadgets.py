"""Gadgetisation round trips and the gadget-order network."""
from __future__ import annotations

from functools import lru_cache
from typing import Any, Dict, List, Tuple

from acr_workbench.families import family_graphs
from acr_workbench.gnn.builders import build_gadget_order_gnn
from acr_workbench.gnn.network import AcrGnn, run_all
from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.graphs.fgr import write_graph
from acr_workbench.graphs.gadgets import (
    BOTH_FEATURE,
    degadgetise,
    gadgetise,
    identity_vertex,
    is_gadget_of_strict_linear_order,
    sink_vertex,
    source_vertex,
)
from acr_workbench.graphs.generators import make_strict_linear_order, random_graph
from acr_workbench.graphs.homcount import count_gadget_p2, count_p2
from acr_workbench.graphs.isomorphism import isomorphic
from acr_workbench.models import SuiteReport, Violation
from acr_workbench.suites.base import CaseResult, Suite, SuiteContext, case_rng, chunk, record, run_sharded

Payload = Tuple[str, int, int, int]


@lru_cache(maxsize=1)
def _network() -> AcrGnn:
    return build_gadget_order_gnn()


def _round_trip(seed: int, index: int) -> List[Violation]:
    rng = case_rng(seed, index)
    graph = random_graph(rng.randint(1, 6), edge_prob=rng.random(), seed=rng)
    gadget = gadgetise(graph)
    violations = []
    if not isomorphic(degadgetise(gadget), graph):
        violations.append(Violation(check="degadgetise_inverts_gadgetise", detail="round trip changed the digraph",
                                    witness=write_graph(graph)))
    if count_gadget_p2(gadget) != count_p2(graph):
        violations.append(Violation(check="gadget_p2_count",
                                    detail=f"{count_gadget_p2(gadget)} != {count_p2(graph)}",
                                    witness=write_graph(graph)))
    return violations


def structured_negative(seed: int, index: int) -> FeaturedGraph:
    """Order gadgets broken in one clause, gadgets of non-orders, or the family's swapped graph."""

    rng = case_rng(seed, index)
    n = rng.randint(2, 7)
    order = make_strict_linear_order(n)
    gadget = gadgetise(order)
    kind = index % 6
    if kind == 0:
        features = list(gadget.features)
        features[rng.randrange(gadget.n)] = BOTH_FEATURE
        return FeaturedGraph.create(gadget.n, gadget.edges, features, d=2, mode=gadget.mode)
    if kind == 1:
        u, v = rng.sample(range(n), 2)
        return gadget.with_edges(set(gadget.edges) | {(source_vertex(u), source_vertex(v))})
    if kind == 2:
        u = rng.randrange(n)
        edge = (source_vertex(u), identity_vertex(u)) if rng.random() < 0.5 else (identity_vertex(u), sink_vertex(u))
        return gadget.with_edges(set(gadget.edges) - {edge, edge[::-1]})
    if kind == 3:
        u, v = rng.sample(range(n), 2)
        return gadget.with_edges(set(gadget.edges) | {(identity_vertex(u), sink_vertex(v))})
    if kind == 4:
        u, v = rng.sample(range(n), 2)
        return gadgetise(order.with_edges(set(order.edges) ^ {(u, v)}))
    if rng.random() < 0.5:
        return family_graphs(1, rng.randint(1, 2))[1]
    return gadgetise(random_graph(n, edge_prob=rng.random(), seed=rng))


def _classify(graph: FeaturedGraph) -> List[Violation]:
    expected = int(is_gadget_of_strict_linear_order(graph))
    verdicts = run_all(_network(), graph)
    if all(verdict == expected for verdict in verdicts):
        return []
    return [Violation(check="gadget_network_accepts_order_gadgets",
                      detail=f"order gadget={bool(expected)}, verdicts={sorted(set(verdicts))}",
                      witness=write_graph(graph))]


def _worker(payload: Payload) -> CaseResult:
    kind, seed, start, stop = payload
    violations: List[Violation] = []
    for index in range(start, stop):
        if kind == "round-trip":
            violations.extend(_round_trip(seed, index))
        elif kind == "order":
            violations.extend(_classify(gadgetise(make_strict_linear_order(index + 1))))
        else:
            violations.extend(_classify(structured_negative(seed, index)))
    return stop - start, violations


class GadgetSuite(Suite):
    name = "gadget-gnn"
    description = "gadgetisation round trips, P2 counts and the gadget-order network"

    def parameters(self, context: SuiteContext) -> Dict[str, Any]:
        return {
            "round_trips": int(context.option(self.name, "round_trips", 100)),
            "max_order": int(context.option(self.name, "max_order", 50)),
            "negatives": int(context.option(self.name, "negatives", 1000)),
        }

    def check(self, context: SuiteContext, parameters: Dict[str, Any], report: SuiteReport) -> None:
        payloads: List[Payload] = []
        for part in chunk(parameters["round_trips"], context.jobs):
            payloads.append(("round-trip", context.seed, part.start, part.stop))
        for part in chunk(parameters["negatives"], context.jobs):
            payloads.append(("negative", context.seed, part.start, part.stop))
        for part in chunk(parameters["max_order"], context.jobs):
            payloads.append(("order", context.seed, part.start, part.stop))
        record(report, run_sharded(_worker, payloads, context.jobs))


__all__ = ["GadgetSuite", "structured_negative"]
