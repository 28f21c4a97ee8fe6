"""Companion graph surgery and invariance of bounded networks under it."""
from __future__ import annotations

from typing import Any, Dict, List, Optional, Sequence, Tuple

from acr_workbench.bisim.refinement import graded_types
from acr_workbench.errors import PreconditionError
from acr_workbench.companion.surgery import (
    free_edge_transfer,
    free_witness,
    homogenise,
    initial_good_graph,
    saturate,
)
from acr_workbench.gnn.builders import random_bounded_network
from acr_workbench.gnn.network import final_embeddings
from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.graphs.fgr import write_graph
from acr_workbench.graphs.generators import random_graph
from acr_workbench.models import SuiteReport, SurgeryReport, Violation
from acr_workbench.suites.base import CaseResult, Suite, SuiteContext, case_rng, chunk, record, run_sharded

Payload = Tuple[int, int, int]


def _lower_labels(graph: FeaturedGraph, L: int, c: int) -> Sequence[int]:
    if L == 0:
        return [0] * graph.n
    return graded_types([graph], L - 1, c).labels_of(0)


def find_transfer(graph: FeaturedGraph, v: int, L: int, c: int) -> Optional[Tuple[int, int]]:
    """First ``(w, w')`` admissible for a free edge transfer at ``v``."""

    lower = _lower_labels(graph, L, c)
    for w in graph.adjacency[v]:
        for w_prime in graph.vertices:
            if not graph.has_edge(v, w_prime) and lower[w] == lower[w_prime]:
                return w, w_prime
    return None


def find_witnesses(graph: FeaturedGraph, v: int, L: int, c: int) -> Optional[Tuple[List[int], int]]:
    """``c`` out-neighbours of ``v`` and a non-neighbour, all of one lower type."""

    lower = _lower_labels(graph, L, c)
    for w_prime in graph.vertices:
        if graph.has_edge(v, w_prime):
            continue
        witnesses = [w for w in graph.adjacency[v] if lower[w] == lower[w_prime]]
        if len(witnesses) >= c:
            return witnesses[:c], w_prime
    return None


def _surgery_violations(report: SurgeryReport, context: str, graph: FeaturedGraph) -> List[Violation]:
    if report.valid:
        return []
    failed = [name for name, ok in report.conditions.items() if not ok]
    return [Violation(check=f"{report.operation}_certified",
                      detail=f"{context}: vertices {report.failed_vertices()} conditions {failed}",
                      witness=write_graph(graph))]


def _surgery_case(seed: int, index: int) -> Tuple[int, List[Violation]]:
    rng = case_rng(seed, index)
    L, c = rng.randint(1, 2), rng.randint(1, 2)
    graph = random_graph(rng.randint(1, 10), d=rng.randint(0, 1), edge_prob=rng.random(), seed=rng)
    v = rng.randrange(graph.n)
    label = f"L={L} c={c} v={v}"
    checked = 0
    violations: List[Violation] = []

    saturated, report = saturate(graph, v, L, c)
    violations.extend(_surgery_violations(report, label, graph))
    again, _ = saturate(saturated, v, L, c)
    if again != saturated:
        violations.append(Violation(check="saturate_idempotent", detail=label, witness=write_graph(graph)))
    _, report = initial_good_graph(graph, v, L, c)
    violations.extend(_surgery_violations(report, label, graph))
    checked += 2

    transfer = find_transfer(graph, v, L, c)
    if transfer is not None:
        _, report = free_edge_transfer(graph, v, transfer[0], transfer[1], L, c)
        violations.extend(_surgery_violations(report, f"{label} transfer {transfer}", graph))
        checked += 1
    witnessed = find_witnesses(graph, v, L, c)
    if witnessed is not None:
        _, report = free_witness(graph, v, witnessed[0], witnessed[1], L, c)
        violations.extend(_surgery_violations(report, f"{label} witnesses {witnessed}", graph))
        checked += 1

    permutation = list(range(graph.n))
    rng.shuffle(permutation)
    _, report = homogenise(graph, v, graph.relabel(permutation), permutation[v], L, c, c + rng.randint(0, 1))
    violations.extend(_surgery_violations(report, f"{label} homogenise", graph))
    return checked + 1, violations


def _homogenise_pair_case(seed: int, index: int) -> Tuple[int, List[Violation]]:
    """Homogenise a random graph against an independently drawn bisimilar one (c = 1)."""

    rng = case_rng(seed, index)
    L, q_prime = rng.randint(1, 2), rng.randint(1, 3)
    g1 = random_graph(rng.randint(1, 5), edge_prob=rng.random(), seed=rng)
    v1 = rng.randrange(g1.n)
    for _ in range(20):
        g2 = random_graph(rng.randint(1, 8), edge_prob=rng.random(), seed=rng)
        for v2 in g2.vertices:
            try:
                _, report = homogenise(g1, v1, g2, v2, L, 1, q_prime)
            except PreconditionError:
                continue
            label = f"L={L} c=1 q'={q_prime} v1={v1} v2={v2} against G1 {sorted(g1.edges)}"
            return 1, _surgery_violations(report, label, g2)
    return 0, []


def _surgery_worker(payload: Payload) -> CaseResult:
    seed, start, stop = payload
    checked = 0
    violations: List[Violation] = []
    for index in range(start, stop):
        for case in (_surgery_case, _homogenise_pair_case):
            count, found = case(seed, index)
            checked += count
            violations.extend(found)
    return checked, violations


class CompanionSuite(Suite):
    name = "companion"
    description = "surgery keeps every vertex bisimilar to itself and meets its structural conditions"

    def parameters(self, context: SuiteContext) -> Dict[str, Any]:
        return {"graphs": int(context.option(self.name, "graphs", 100))}

    def check(self, context: SuiteContext, parameters: Dict[str, Any], report: SuiteReport) -> None:
        payloads = [(context.seed, part.start, part.stop) for part in chunk(parameters["graphs"], context.jobs)]
        record(report, run_sharded(_surgery_worker, payloads, context.jobs))


def _invariance_case(seed: int, index: int, networks: int) -> Tuple[int, List[Violation]]:
    rng = case_rng(seed, index)
    L, c, d = rng.randint(1, 3), rng.randint(1, 2), rng.randint(1, 2)
    graph = random_graph(rng.randint(1, 8), d=d, edge_prob=rng.random(), seed=rng)
    v = rng.randrange(graph.n)
    companion, report = saturate(graph, v, L, c)
    if not all(report.certificate):
        return 1, [Violation(check="saturate_certificate", detail=f"L={L} c={c} v={v}",
                             witness=write_graph(graph))]
    violations: List[Violation] = []
    for k in range(networks):
        net = random_bounded_network(L, d, 3, c, seed=rng.randrange(2 ** 32))
        before, after = final_embeddings(net, graph), final_embeddings(net, companion)
        differing = [u for u in graph.vertices if before[u] != after[u]]
        if differing:
            violations.append(Violation(
                check="bounded_network_invariance",
                detail=f"L={L} c={c} network {k}: vertices {differing} differ",
                witness=write_graph(graph)))
    return networks, violations


def _invariance_worker(payload: Tuple[int, int, int, int]) -> CaseResult:
    seed, start, stop, networks = payload
    checked = 0
    violations: List[Violation] = []
    for index in range(start, stop):
        count, found = _invariance_case(seed, index, networks)
        checked += count
        violations.extend(found)
    return checked, violations


class InvarianceSuite(Suite):
    name = "invariance"
    description = "L-layer networks with c-bounded aggregation cannot tell bisimilar points apart"

    def parameters(self, context: SuiteContext) -> Dict[str, Any]:
        return {
            "pairs": int(context.option(self.name, "pairs", 200)),
            "networks": int(context.option(self.name, "networks", 20)),
        }

    def check(self, context: SuiteContext, parameters: Dict[str, Any], report: SuiteReport) -> None:
        payloads = [(context.seed, part.start, part.stop, parameters["networks"])
                    for part in chunk(parameters["pairs"], context.jobs)]
        record(report, run_sharded(_invariance_worker, payloads, context.jobs))


__all__ = ["CompanionSuite", "InvarianceSuite", "find_transfer", "find_witnesses"]
