"""Strict linear orders: the count characterisation and the six-layer network."""
from __future__ import annotations

from functools import lru_cache
from typing import Any, Dict, Iterator, List, Tuple

from acr_workbench.gnn.builders import build_linear_order_gnn
from acr_workbench.gnn.network import AcrGnn, run_all, run_trace
from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.graphs.fgr import write_graph
from acr_workbench.graphs.generators import enumerate_digraphs, enumeration_size, make_strict_linear_order, random_graph
from acr_workbench.graphs.orders import characterization_holds, is_strict_linear_order, order_counts
from acr_workbench.models import SuiteReport, Violation
from acr_workbench.suites.base import CaseResult, Suite, SuiteContext, case_rng, chunk, record, run_sharded

Payload = Tuple[str, str, int, int, int]


@lru_cache(maxsize=1)
def _network() -> AcrGnn:
    return build_linear_order_gnn()


def _random_case(seed: int, index: int) -> FeaturedGraph:
    """Random digraph on 5..8 vertices, biased towards orders and near-orders."""

    rng = case_rng(seed, index)
    n = rng.randint(5, 8)
    kind = rng.random()
    if kind < 0.4:
        permutation = list(range(n))
        rng.shuffle(permutation)
        order = make_strict_linear_order(n).relabel(permutation)
        if kind < 0.2:
            return order
        u, v = rng.sample(range(n), 2)
        return order.with_edges(set(order.edges) ^ {(u, v)})
    return random_graph(n, edge_prob=rng.random(), seed=rng)


def _corpus(payload: Payload) -> Iterator[FeaturedGraph]:
    kind, _, value, start, stop = payload
    if kind == "exhaustive":
        yield from enumerate_digraphs(value, 0, start, stop, bit_cap=value * value)
    else:
        for index in range(start, stop):
            yield _random_case(value, index)


def _check_characterisation(graph: FeaturedGraph) -> List[Violation]:
    expected = is_strict_linear_order(graph)
    if characterization_holds(graph) == expected:
        return []
    return [Violation(check="counts_characterise_orders",
                      detail=f"order={expected}, counts={order_counts(graph)}",
                      witness=write_graph(graph))]


def _check_network(graph: FeaturedGraph) -> List[Violation]:
    expected = int(is_strict_linear_order(graph))
    verdicts = run_all(_network(), graph)
    if all(verdict == expected for verdict in verdicts):
        return []
    return [Violation(check="network_accepts_orders",
                      detail=f"order={bool(expected)}, verdicts={verdicts}",
                      witness=write_graph(graph))]


def _worker(payload: Payload) -> CaseResult:
    if payload[0] == "orders":
        _, _, _, start, stop = payload
        return stop - start, [v for n in range(start + 1, stop + 1) for v in _check_layer_four(n)]
    checker = _check_network if payload[1] == "network" else _check_characterisation
    checked = 0
    violations: List[Violation] = []
    for graph in _corpus(payload):
        checked += 1
        violations.extend(checker(graph))
    return checked, violations


def _payloads(check: str, parameters: Dict[str, Any], seed: int, jobs: int) -> List[Payload]:
    payloads: List[Payload] = []
    for n in range(1, parameters["exhaustive_n"] + 1):
        for part in chunk(enumeration_size(n, 0), jobs):
            payloads.append(("exhaustive", check, n, part.start, part.stop))
    for part in chunk(parameters["random_cases"], jobs):
        payloads.append(("random", check, seed, part.start, part.stop))
    return payloads


def _exhaustive_limit(context: SuiteContext, suite: str) -> int:
    n = int(context.option(suite, "n", 4))
    while n > 0 and n * n > context.limits.enumeration_bits:
        n -= 1
    return n


class CountCharacterisationSuite(Suite):
    name = "lemma32"
    description = "|E| = C(n,2) and hom(P2) = C(n,3) hold exactly on strict linear orders"

    def parameters(self, context: SuiteContext) -> Dict[str, Any]:
        return {
            "exhaustive_n": _exhaustive_limit(context, self.name),
            "random_cases": int(context.option(self.name, "random_cases", 10000)),
        }

    def check(self, context: SuiteContext, parameters: Dict[str, Any], report: SuiteReport) -> None:
        record(report, run_sharded(_worker, _payloads("counts", parameters, context.seed, context.jobs),
                                   context.jobs))


class OrderNetworkSuite(Suite):
    name = "order-gnn"
    description = "the six-layer network accepts exactly the strict linear orders"

    def parameters(self, context: SuiteContext) -> Dict[str, Any]:
        return {
            "exhaustive_n": _exhaustive_limit(context, self.name),
            "random_cases": int(context.option(self.name, "random_cases", 10000)),
            "max_order": int(context.option(self.name, "max_order", 200)),
        }

    def check(self, context: SuiteContext, parameters: Dict[str, Any], report: SuiteReport) -> None:
        payloads = _payloads("network", parameters, context.seed, context.jobs)
        payloads += [("orders", "network", 0, part.start, part.stop)
                     for part in chunk(parameters["max_order"], context.jobs)]
        record(report, run_sharded(_worker, payloads, context.jobs))


def _check_layer_four(n: int) -> List[Violation]:
    graph = make_strict_linear_order(n)
    trace = run_trace(_network(), graph)
    counts = order_counts(graph)
    expected = (counts["edges"], counts["binomial_n_2"], counts["hom_p2"], counts["binomial_n_3"])
    problems = [v for v in graph.vertices if tuple(trace.at(4, v)) != expected]
    if not problems:
        return []
    return [Violation(check="layer_four_counts",
                      detail=f"order({n}) vertex {problems[0]}: {trace.at(4, problems[0])} != {expected}")]


__all__ = ["CountCharacterisationSuite", "OrderNetworkSuite"]
