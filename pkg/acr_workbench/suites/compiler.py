"""Compiled networks against the model checker."""
from __future__ import annotations

from typing import Any, Dict, List, Tuple

from acr_workbench.gnn.compiler import compile_formula
from acr_workbench.gnn.network import aggregation_ignores_excess, run_all, run_trace
from acr_workbench.gnn.transforms import to_simple
from acr_workbench.graphs.core import GraphMode
from acr_workbench.graphs.fgr import write_graph
from acr_workbench.graphs.generators import random_graph
from acr_workbench.graphs.orders import max_out_degree
from acr_workbench.logic.random_formulas import random_formula
from acr_workbench.logic.semantics import build_degree_bound_formula, satisfying_vertices
from acr_workbench.logic.syntax import to_text
from acr_workbench.models import SuiteReport, Violation
from acr_workbench.suites.base import CaseResult, Suite, SuiteContext, case_rng, chunk, record, run_sharded

Payload = Tuple[int, int, int, int]


def _compiler_case(seed: int, index: int, spot_checks: int) -> List[Violation]:
    rng = case_rng(seed, index)
    d = rng.randint(0, 2)
    formula = random_formula(rng.randint(0, 3), d, max_grading=3, seed=rng)
    mode = GraphMode.DIRECTED if rng.random() < 0.5 else GraphMode.UNDIRECTED
    graph = random_graph(rng.randint(1, 8), d=d, edge_prob=rng.random(), mode=mode, seed=rng)
    net = compile_formula(formula, input_dim=d)
    expected = [int(v in satisfying_vertices(formula, graph)) for v in graph.vertices]
    violations = []
    if run_all(net, graph) != expected:
        violations.append(Violation(check="compiled_network_matches_evaluator",
                                    detail=f"formula {to_text(formula)}", witness=write_graph(graph)))
    if run_all(to_simple(net), graph) != expected:
        violations.append(Violation(check="simple_network_matches_evaluator",
                                    detail=f"formula {to_text(formula)}", witness=write_graph(graph)))
    if index < spot_checks and not aggregation_ignores_excess(net, graph, run_trace(net, graph)):
        violations.append(Violation(check="compiled_aggregation_is_bounded",
                                    detail=f"formula {to_text(formula)}", witness=write_graph(graph)))
    return violations


def _compiler_worker(payload: Payload) -> CaseResult:
    seed, start, stop, spot_checks = payload
    violations: List[Violation] = []
    for index in range(start, stop):
        violations.extend(_compiler_case(seed, index, spot_checks))
    return stop - start, violations


class CompilerSuite(Suite):
    name = "compiler"
    description = "compiled GML networks classify exactly like the model checker"

    def parameters(self, context: SuiteContext) -> Dict[str, Any]:
        return {
            "cases": int(context.option(self.name, "cases", 1000)),
            "spot_checks": int(context.option(self.name, "spot_checks", 100)),
        }

    def check(self, context: SuiteContext, parameters: Dict[str, Any], report: SuiteReport) -> None:
        payloads = [(context.seed, part.start, part.stop, parameters["spot_checks"])
                    for part in chunk(parameters["cases"], context.jobs)]
        record(report, run_sharded(_compiler_worker, payloads, context.jobs))


class BoundedDegreeSuite(Suite):
    name = "bounded-degree"
    description = "the degree sentence and its network detect out-degree above c"

    def parameters(self, context: SuiteContext) -> Dict[str, Any]:
        return {"cases": int(context.option(self.name, "cases", 300))}

    def check(self, context: SuiteContext, parameters: Dict[str, Any], report: SuiteReport) -> None:
        for index in range(parameters["cases"]):
            rng = case_rng(context.seed, index)
            c = rng.randint(0, 3)
            graph = random_graph(rng.randint(1, 8), edge_prob=rng.random(), seed=rng,
                                 max_outdeg=rng.randint(0, 4))
            formula = build_degree_bound_formula(c)
            expected = max_out_degree(graph) <= c
            satisfied = satisfying_vertices(formula, graph)
            verdicts = run_all(compile_formula(formula, input_dim=0), graph)
            report.checked += 1
            if (len(satisfied) == graph.n) != expected or any(bool(v) != expected for v in verdicts):
                report.violations.append(Violation(
                    check="degree_sentence",
                    detail=f"c={c}, max out-degree {max_out_degree(graph)}",
                    witness=write_graph(graph)))


__all__ = ["BoundedDegreeSuite", "CompilerSuite"]
