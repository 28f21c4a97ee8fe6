"""Refinement algorithms against direct game search."""
from __future__ import annotations

from typing import Any, Dict, List, Tuple

from acr_workbench.bisim.c2 import c2_types
from acr_workbench.bisim.ef import ef_equivalent
from acr_workbench.bisim.games import c2_game_equivalent, graded_game_equivalent
from acr_workbench.bisim.refinement import graded_types
from acr_workbench.graphs.core import GraphMode
from acr_workbench.graphs.fgr import write_graph
from acr_workbench.graphs.generators import random_graph
from acr_workbench.models import SuiteReport, Violation
from acr_workbench.suites.base import CaseResult, Suite, SuiteContext, case_rng, chunk, record, run_sharded

Payload = Tuple[int, int, int]


def _game_case(seed: int, index: int) -> List[Violation]:
    rng = case_rng(seed, index)
    L, c = rng.randint(0, 2), rng.randint(1, 2)
    d = rng.randint(0, 1)
    mode = GraphMode.DIRECTED if rng.random() < 0.7 else GraphMode.UNDIRECTED
    g1 = random_graph(rng.randint(1, 6), d=d, edge_prob=rng.random(), mode=mode, seed=rng)
    if rng.random() < 0.5:
        permutation = list(range(g1.n))
        rng.shuffle(permutation)
        g2 = g1.relabel(permutation)
    else:
        g2 = random_graph(rng.randint(1, 6), d=d, edge_prob=rng.random(), mode=mode, seed=rng)
    respect_equality = rng.random() < 0.8
    label = f"L={L} c={c} equality={respect_equality}"
    witness = write_graph(g1) + "\n" + write_graph(g2)

    graded = graded_types([g1, g2], L, c)
    counting = c2_types([g1, g2], L, c, respect_equality)
    violations: List[Violation] = []
    for v1 in g1.vertices:
        for v2 in g2.vertices:
            refined = graded.label(0, v1) == graded.label(1, v2)
            if refined != graded_game_equivalent(g1, v1, g2, v2, L, c):
                violations.append(Violation(check="graded_refinement_matches_game",
                                            detail=f"{label} v1={v1} v2={v2}", witness=witness))
            refined = counting.label(0, v1) == counting.label(1, v2)
            if refined != c2_game_equivalent(g1, v1, g2, v2, L, c, respect_equality):
                violations.append(Violation(check="c2_refinement_matches_game",
                                            detail=f"{label} v1={v1} v2={v2}", witness=witness))
    return violations


def _ef_case(seed: int, index: int) -> List[Violation]:
    """q-round first-order equivalence of pointed graphs implies (q, 1)-graded bisimilarity."""

    rng = case_rng(seed, index)
    q = rng.randint(0, 2)
    g1 = random_graph(rng.randint(1, 5), edge_prob=rng.random(), seed=rng)
    g2 = random_graph(rng.randint(1, 5), edge_prob=rng.random(), seed=rng)
    v1, v2 = rng.randrange(g1.n), rng.randrange(g2.n)
    if not ef_equivalent(g1, (v1,), g2, (v2,), q):
        return []
    types = graded_types([g1, g2], q, 1)
    if types.label(0, v1) == types.label(1, v2):
        return []
    return [Violation(check="first_order_equivalence_refines_bisimilarity",
                      detail=f"q={q} v1={v1} v2={v2}", witness=write_graph(g1) + "\n" + write_graph(g2))]


def _worker(payload: Payload) -> CaseResult:
    seed, start, stop = payload
    violations: List[Violation] = []
    for index in range(start, stop):
        violations.extend(_game_case(seed, index))
        violations.extend(_ef_case(seed, index))
    return 2 * (stop - start), violations


class GameSuite(Suite):
    name = "games"
    description = "graded and two-pebble refinement agree with recursive game search"

    def parameters(self, context: SuiteContext) -> Dict[str, Any]:
        return {"graphs": int(context.option(self.name, "graphs", 200))}

    def check(self, context: SuiteContext, parameters: Dict[str, Any], report: SuiteReport) -> None:
        payloads = [(context.seed, part.start, part.stop) for part in chunk(parameters["graphs"], context.jobs)]
        record(report, run_sharded(_worker, payloads, context.jobs))


__all__ = ["GameSuite"]
