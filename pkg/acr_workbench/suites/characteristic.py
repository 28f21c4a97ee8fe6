"""Characteristic formulas against the bisimulation refinement."""
from __future__ import annotations

import random
from typing import Any, Dict, List, Tuple

from acr_workbench.bisim.refinement import GlobalMode, bisimilar
from acr_workbench.companion.formulas import chi_formula, gamma_formula, property_formula, strip_global
from acr_workbench.companion.surgery import saturate
from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.graphs.fgr import write_graph
from acr_workbench.graphs.generators import random_graph
from acr_workbench.logic.random_formulas import random_formula
from acr_workbench.logic.semantics import satisfying_vertices
from acr_workbench.logic.syntax import to_text
from acr_workbench.models import SuiteReport, Violation
from acr_workbench.suites.base import CaseResult, Suite, SuiteContext, case_rng, chunk, record, run_sharded

Payload = Tuple[int, int, int, int]


def pointed_pair(seed: int, index: int) -> Tuple[FeaturedGraph, int, FeaturedGraph, int, Dict[str, int]]:
    """Two pointed graphs that are bisimilar often enough to exercise both verdicts."""

    rng = case_rng(seed, index)
    params = {"L": rng.randint(0, 3), "c": rng.randint(1, 2), "q": rng.randint(1, 3)}
    d = rng.randint(0, 1)
    g1 = random_graph(rng.randint(1, 7), d=d, edge_prob=rng.random(), seed=rng)
    v1 = rng.randrange(g1.n)
    kind = rng.random()
    if kind < 1 / 3:
        permutation = list(range(g1.n))
        rng.shuffle(permutation)
        return g1, v1, g1.relabel(permutation), permutation[v1], params
    if kind < 2 / 3:
        companion, _ = saturate(g1, v1, max(params["L"], 1), params["c"])
        return g1, v1, companion, rng.randrange(g1.n), params
    g2 = random_graph(rng.randint(1, 7), d=d, edge_prob=rng.random(), seed=rng)
    return g1, v1, g2, rng.randrange(g2.n), params


def _pair_case(seed: int, index: int, property_every: int) -> List[Violation]:
    g1, v1, g2, v2, params = pointed_pair(seed, index)
    L, c, q = params["L"], params["c"], params["q"]
    label = f"L={L} c={c} q={q} v1={v1} v2={v2}"
    witness = write_graph(g1) + "\n" + write_graph(g2)
    violations: List[Violation] = []
    chi = chi_formula(g1, v1, L, c)
    if (v2 in satisfying_vertices(chi, g2)) != bisimilar(g1, v1, g2, v2, L, c):
        violations.append(Violation(check="chi_characterises_bisimilarity", detail=label, witness=witness))
    gamma = gamma_formula(g1, v1, L, c, q)
    capped = bisimilar(g1, v1, g2, v2, L, c, mode=GlobalMode.capped(q))
    if (v2 in satisfying_vertices(gamma, g2)) != capped:
        violations.append(Violation(check="gamma_characterises_capped_bisimilarity",
                                    detail=label, witness=witness))
    if strip_global(gamma) != chi:
        violations.append(Violation(check="strip_global_recovers_chi", detail=label))
    if property_every and index % property_every == 0:
        violations.extend(_property_case(seed, index, g1, g2, params))
    return violations


def _property_case(seed: int, index: int, g1: FeaturedGraph, g2: FeaturedGraph,
                   params: Dict[str, int]) -> List[Violation]:
    """Labels from a formula within the (L, c, q) budget always admit a defining formula."""

    rng = random.Random(f"property:{seed}:{index}")
    L, c, q = params["L"], params["c"], params["q"]
    target = random_formula(L, g1.d, max_grading=min(c, q), seed=rng)
    examples = []
    for graph in (g1, g2):
        truth = satisfying_vertices(target, graph)
        examples.extend((graph, v, v in truth) for v in graph.vertices)
    psi, result = property_formula(examples, L, c, q)
    if psi is None:
        return [Violation(check="property_formula_exists", detail=f"target {to_text(target)}: {result.detail}")]
    for graph, v, expected in examples:
        if (v in satisfying_vertices(psi, graph)) != expected:
            return [Violation(check="property_formula_defines_labels", detail=f"target {to_text(target)}")]
    return []


def _worker(payload: Payload) -> CaseResult:
    seed, start, stop, property_every = payload
    violations: List[Violation] = []
    for index in range(start, stop):
        violations.extend(_pair_case(seed, index, property_every))
    return stop - start, violations


class CharacteristicSuite(Suite):
    name = "charformulas"
    description = "chi and gamma hold exactly on the bisimulation classes they describe"

    def parameters(self, context: SuiteContext) -> Dict[str, Any]:
        return {
            "pairs": int(context.option(self.name, "pairs", 500)),
            "property_every": int(context.option(self.name, "property_every", 5)),
        }

    def check(self, context: SuiteContext, parameters: Dict[str, Any], report: SuiteReport) -> None:
        payloads = [(context.seed, part.start, part.stop, parameters["property_every"])
                    for part in chunk(parameters["pairs"], context.jobs)]
        record(report, run_sharded(_worker, payloads, context.jobs))


__all__ = ["CharacteristicSuite", "pointed_pair"]
