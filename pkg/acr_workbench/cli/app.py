"""Command-line entry point for the workbench."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from acr_workbench.bisim.c2 import c2_types
from acr_workbench.bisim.games import c2_game_equivalent, graded_game_equivalent
from acr_workbench.bisim.refinement import GlobalMode, bisimilar, class_table, graded_types
from acr_workbench.companion.formulas import chi_formula, gamma_formula
from acr_workbench.companion.surgery import homogenise, initial_good_graph, saturate
from acr_workbench.errors import InvalidParameterError, WorkbenchError
from acr_workbench.families import c2_counterexample_family
from acr_workbench.gnn.compiler import compile_formula
from acr_workbench.gnn.network import describe, run_all, run_trace
from acr_workbench.gnn.serialization import save_network, write_network
from acr_workbench.gnn.transforms import to_simple
from acr_workbench.graphs.core import FeaturedGraph, GraphMode
from acr_workbench.graphs.fgr import save_graph, write_graph
from acr_workbench.graphs.gadgets import degadgetise, gadgetise
from acr_workbench.graphs.generators import (
    graph_from_index,
    make_complete_digraph,
    make_directed_cycle,
    make_edgeless,
    make_strict_linear_order,
    random_graph,
)
from acr_workbench.graphs.homcount import count_homomorphisms, count_p2
from acr_workbench.graphs.orders import characterization_holds, is_strict_linear_order, order_counts
from acr_workbench.logic.parser import parse_formula
from acr_workbench.logic.semantics import satisfying_vertices
from acr_workbench.logic.syntax import to_text
from acr_workbench.services.catalog import NAMED_GRAPHS, read_formula_argument, resolve_graph, resolve_network
from acr_workbench.utils.configuration import CONFIG_PATH, WorkbenchSettings, load_settings, save_settings
from acr_workbench.utils.filesystem import ArchiveRepository
from acr_workbench.utils.report_export import FORMATS, render_family, render_run, render_surgery
from acr_workbench.workflows.verify_workflow import VerificationWorkflow

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _settings(args: argparse.Namespace) -> WorkbenchSettings:
    settings = load_settings(Path(args.config) if args.config else None)
    if args.seed is not None:
        settings.seed = args.seed
    if args.jobs is not None:
        settings.jobs = max(1, args.jobs)
    if args.format is not None:
        settings.report_format = args.format
    return settings


def _formula(reference: str):
    return parse_formula(read_formula_argument(reference))


def _require_vertex(graph: FeaturedGraph, v: int) -> None:
    if not 0 <= v < graph.n:
        raise InvalidParameterError(f"vertex {v} is out of range for n={graph.n}")


# graph tools ---------------------------------------------------------------

def cmd_gen(args: argparse.Namespace, settings: WorkbenchSettings) -> int:
    kind = args.kind
    if kind == "order":
        graph = make_strict_linear_order(args.n)
    elif kind == "cycle":
        graph = make_directed_cycle(args.n)
    elif kind == "edgeless":
        graph = make_edgeless(args.n, d=args.d, mode=args.mode)
    elif kind == "complete":
        graph = make_complete_digraph(args.n)
    elif kind == "index":
        graph = graph_from_index(args.n, args.d, args.index)
    else:
        graph = random_graph(args.n, d=args.d, edge_prob=args.p, mode=args.mode,
                             seed=settings.seed, max_outdeg=args.max_outdeg)
    if args.out:
        save_graph(graph, args.out)
    else:
        _emit(write_graph(graph))
    return EXIT_OK


def cmd_gadgetise(args: argparse.Namespace, settings: WorkbenchSettings) -> int:
    graph = resolve_graph(args.input)
    result = degadgetise(graph) if args.inverse else gadgetise(graph)
    if args.output:
        save_graph(result, args.output)
    else:
        _emit(write_graph(result))
    return EXIT_OK


def cmd_hom(args: argparse.Namespace, settings: WorkbenchSettings) -> int:
    if args.p2:
        _emit(str(count_p2(resolve_graph(args.p2))))
        return EXIT_OK
    if not (args.pattern and args.target):
        raise InvalidParameterError("hom needs --p2 or both --pattern and --target")
    limits = settings.limits
    count = count_homomorphisms(resolve_graph(args.pattern), resolve_graph(args.target),
                                pattern_cap=limits.hom_pattern_vertices,
                                target_cap=limits.hom_target_vertices)
    _emit(str(count))
    return EXIT_OK


def cmd_order_check(args: argparse.Namespace, settings: WorkbenchSettings) -> int:
    graph = resolve_graph(args.graph)
    lines = [
        f"strict_linear_order: {is_strict_linear_order(graph)}",
        f"characterization: {characterization_holds(graph)}",
    ]
    lines.extend(f"{name}: {value}" for name, value in order_counts(graph).items())
    _emit("\n".join(lines))
    return EXIT_OK


# networks and formulas -----------------------------------------------------

def cmd_gnn(args: argparse.Namespace, settings: WorkbenchSettings) -> int:
    net = resolve_network(args.net)
    if args.action == "describe":
        _emit(json.dumps(describe(net), sort_keys=True))
        return EXIT_OK
    if args.action == "save":
        if not args.out:
            _emit(write_network(net))
        else:
            save_network(net, args.out)
        return EXIT_OK
    if not args.graph:
        raise InvalidParameterError("gnn run needs --graph")
    graph = resolve_graph(args.graph)
    if args.trace:
        _emit("\n".join(["vertex\tlayer\tvector"] + run_trace(net, graph).render()))
    verdicts = run_all(net, graph)
    if args.vertex is not None:
        _require_vertex(graph, args.vertex)
        _emit(str(verdicts[args.vertex]))
    else:
        _emit(" ".join(str(verdict) for verdict in verdicts))
    return EXIT_OK


def cmd_gml(args: argparse.Namespace, settings: WorkbenchSettings) -> int:
    formula = _formula(args.formula)
    if args.action == "print":
        _emit(to_text(formula))
        return EXIT_OK
    if args.action == "compile":
        net = compile_formula(formula, input_dim=args.d)
        if args.simple:
            net = to_simple(net)
        if args.out:
            save_network(net, args.out)
        else:
            _emit(write_network(net))
        return EXIT_OK
    if not args.graph:
        raise InvalidParameterError("gml eval needs --graph")
    graph = resolve_graph(args.graph)
    truth = satisfying_vertices(formula, graph)
    if args.vertex is not None:
        _require_vertex(graph, args.vertex)
        _emit(str(args.vertex in truth).lower())
    else:
        _emit(" ".join(str(v) for v in sorted(truth)))
    return EXIT_OK


# equivalences --------------------------------------------------------------

def cmd_bisim(args: argparse.Namespace, settings: WorkbenchSettings) -> int:
    g1, g2 = resolve_graph(args.g1), resolve_graph(args.g2)
    _require_vertex(g1, args.v1)
    _require_vertex(g2, args.v2)
    mode = GlobalMode.parse(args.global_mode)
    types = graded_types([g1, g2], args.L, args.c)
    verdict = bisimilar(g1, args.v1, g2, args.v2, args.L, args.c, mode=mode, assignment=types)
    lines = [f"bisimilar ({mode.describe()}): {str(verdict).lower()}"]
    if args.search:
        found = graded_game_equivalent(g1, args.v1, g2, args.v2, args.L, args.c,
                                       cap=settings.limits.game_vertices)
        lines.append(f"game search: {str(found).lower()}")
    lines.extend(class_table(types))
    _emit("\n".join(lines))
    return EXIT_OK


def cmd_c2_game(args: argparse.Namespace, settings: WorkbenchSettings) -> int:
    g1, g2 = resolve_graph(args.g1), resolve_graph(args.g2)
    _require_vertex(g1, args.v1)
    _require_vertex(g2, args.v2)
    respect_equality = not args.literal
    types = c2_types([g1, g2], args.L, args.c, respect_equality)
    verdict = types.label(0, args.v1) == types.label(1, args.v2)
    lines = [f"c2 equivalent: {str(verdict).lower()}"]
    if args.search:
        found = c2_game_equivalent(g1, args.v1, g2, args.v2, args.L, args.c, respect_equality,
                                   cap=settings.limits.game_vertices)
        lines.append(f"game search: {str(found).lower()}")
    lines.extend(class_table(types))
    _emit("\n".join(lines))
    return EXIT_OK


def cmd_family(args: argparse.Namespace, settings: WorkbenchSettings) -> int:
    g, h, report = c2_counterexample_family(args.L, args.c, cap=settings.limits.family_product)
    text = render_family(report, settings.report_format)
    if args.outdir:
        repository = ArchiveRepository(args.outdir)
        repository.write_graph("G.fgr", g)
        repository.write_graph("H.fgr", h)
        repository.write_text("report.txt", text)
    _emit(text)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_companion(args: argparse.Namespace, settings: WorkbenchSettings) -> int:
    action = args.action
    if action in ("chi", "gamma"):
        graph = resolve_graph(args.graph)
        if action == "chi":
            formula = chi_formula(graph, args.vertex, args.L, args.c)
        else:
            formula = gamma_formula(graph, args.vertex, args.L, args.c, args.q)
        _emit(to_text(formula))
        return EXIT_OK
    if action == "homogenise":
        g1, g2 = resolve_graph(args.g1), resolve_graph(args.g2)
        result, report = homogenise(g1, args.v1, g2, args.v2, args.L, args.c, args.q_prime)
    else:
        graph = resolve_graph(args.graph)
        operation = saturate if action == "saturate" else initial_good_graph
        result, report = operation(graph, args.vertex, args.L, args.c)
    if args.out:
        save_graph(result, args.out)
    _emit(render_surgery(report, settings.report_format))
    return EXIT_OK if report.valid else EXIT_FAILED


# verification --------------------------------------------------------------

def _suite_options(args: argparse.Namespace) -> Dict[str, Dict[str, Any]]:
    shared: Dict[str, Any] = {}
    for key in ("n", "L", "c", "cases"):
        value = getattr(args, key)
        if value is not None:
            shared[key] = value
    options: Dict[str, Dict[str, Any]] = {}
    for name in args.suites:
        options[name] = dict(shared)
    for assignment in args.set or []:
        target, _, value = assignment.partition("=")
        suite, _, key = target.partition(".")
        if not key or not value:
            raise InvalidParameterError(f"--set expects SUITE.KEY=VALUE, got {assignment!r}")
        options.setdefault(suite, {})[key] = _number(value)
    return options


def _number(value: str) -> Any:
    try:
        return int(value)
    except ValueError:
        return value


def cmd_verify(args: argparse.Namespace, settings: WorkbenchSettings) -> int:
    workflow = VerificationWorkflow.for_names(args.suites)
    options = _suite_options(args)
    if "all" in args.suites:
        shared = options.pop("all", {})
        options = {suite.name: {**shared, **options.get(suite.name, {})} for suite in workflow.suites}
    run = workflow.execute(settings, options)
    text = render_run(run, settings.report_format, timings=args.timings)
    if args.archive:
        repository = ArchiveRepository(args.archive)
        run_id = repository.save_run(run)
        repository.write_text("report.txt", text, run_id=run_id)
        logger.info("archived run %s under %s", run_id, args.archive)
    _emit(text)
    return EXIT_OK if run.passed else EXIT_FAILED


def cmd_config(args: argparse.Namespace, settings: WorkbenchSettings) -> int:
    if args.action == "init":
        path = save_settings(settings, Path(args.config) if args.config else CONFIG_PATH)
        _emit(str(path))
    else:
        _emit(json.dumps(settings.to_dict(), ensure_ascii=False, indent=2, sort_keys=True))
    return EXIT_OK


# parser --------------------------------------------------------------------

def _add_pair(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--g1", required=True, help="FGR path or catalog name")
    parser.add_argument("--v1", type=int, required=True)
    parser.add_argument("--g2", required=True, help="FGR path or catalog name")
    parser.add_argument("--v2", type=int, required=True)
    parser.add_argument("--L", type=int, required=True)
    parser.add_argument("--c", type=int, required=True)


def _global_options(top_level: bool) -> argparse.ArgumentParser:
    """Options accepted before or after the subcommand; subcommands leave unset ones alone."""

    def default(value: Any) -> Any:
        return value if top_level else argparse.SUPPRESS

    options = argparse.ArgumentParser(add_help=False)
    options.add_argument("--seed", type=int, default=default(None))
    options.add_argument("--jobs", type=int, default=default(None))
    options.add_argument("--format", choices=FORMATS, default=default(None))
    options.add_argument("--config", default=default(None), help="settings JSON (default storage/settings.json)")
    options.add_argument("--log-level", default=default("WARNING"))
    options.add_argument("--timings", action="store_true", default=default(False),
                         help="include run ids and runtimes in reports")
    return options


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acr-workbench",
        description="Exact ACR-GNN, graded modal logic and bisimulation workbench.",
        epilog="catalog graphs: " + ", ".join(sorted(NAMED_GRAPHS)),
        parents=[_global_options(top_level=True)],
    )
    shared = _global_options(top_level=False)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[shared], help="generate a graph as FGR")
    gen.add_argument("kind", choices=["order", "cycle", "edgeless", "complete", "random", "index"])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--d", type=int, default=0)
    gen.add_argument("--p", type=float, default=0.5)
    gen.add_argument("--mode", choices=[mode.value for mode in GraphMode], default=GraphMode.DIRECTED.value)
    gen.add_argument("--max-outdeg", type=int, default=None)
    gen.add_argument("--index", type=int, default=0)
    gen.add_argument("--out", default=None)
    gen.set_defaults(handler=cmd_gen)

    gadget = sub.add_parser("gadgetise", parents=[shared], help="gadgetise a digraph (or invert with --inverse)")
    gadget.add_argument("input")
    gadget.add_argument("output", nargs="?")
    gadget.add_argument("--inverse", action="store_true")
    gadget.set_defaults(handler=cmd_gadgetise)

    hom = sub.add_parser("hom", parents=[shared], help="count feature-preserving homomorphisms")
    hom.add_argument("--pattern")
    hom.add_argument("--target")
    hom.add_argument("--p2")
    hom.set_defaults(handler=cmd_hom)

    order = sub.add_parser("order-check", parents=[shared], help="order predicate and the four counts")
    order.add_argument("graph")
    order.set_defaults(handler=cmd_order_check)

    gnn = sub.add_parser("gnn", parents=[shared], help="run, describe or save a network")
    gnn.add_argument("action", choices=["run", "describe", "save"])
    gnn.add_argument("--net", required=True, help="linear-order, gadget-order, compiled:<formula> or a file")
    gnn.add_argument("--graph")
    gnn.add_argument("--vertex", type=int)
    gnn.add_argument("--trace", action="store_true")
    gnn.add_argument("--out")
    gnn.set_defaults(handler=cmd_gnn)

    gml = sub.add_parser("gml", parents=[shared], help="evaluate, print or compile a formula")
    gml.add_argument("action", choices=["eval", "print", "compile"])
    gml.add_argument("--formula", required=True, help="formula text or a file holding it")
    gml.add_argument("--graph")
    gml.add_argument("--vertex", type=int)
    gml.add_argument("--d", type=int, default=None, help="input dimension of the compiled network")
    gml.add_argument("--simple", action="store_true", help="emit the sum/ReLU form")
    gml.add_argument("--out")
    gml.set_defaults(handler=cmd_gml)

    bisim = sub.add_parser("bisim", parents=[shared], help="graded bisimilarity with optional global counts")
    _add_pair(bisim)
    bisim.add_argument("--global", dest="global_mode", default="none", help="none, exact or capped:q")
    bisim.add_argument("--search", action="store_true", help="also run the direct game search")
    bisim.set_defaults(handler=cmd_bisim)

    c2 = sub.add_parser("c2-game", parents=[shared], help="two-pebble counting equivalence")
    _add_pair(c2)
    c2.add_argument("--literal", action="store_true", help="ignore whether a challenge hits the pebble")
    c2.add_argument("--search", action="store_true", help="also run the direct game search")
    c2.set_defaults(handler=cmd_c2_game)

    family = sub.add_parser("family", parents=[shared], help="build and certify the two-pebble counterexample pair")
    family.add_argument("--L", type=int, required=True)
    family.add_argument("--c", type=int, required=True)
    family.add_argument("--outdir")
    family.set_defaults(handler=cmd_family)

    companion = sub.add_parser("companion", parents=[shared], help="companion surgery and characteristic formulas")
    companion.add_argument("action", choices=["saturate", "good", "homogenise", "chi", "gamma"])
    companion.add_argument("--graph")
    companion.add_argument("--vertex", type=int, default=0)
    companion.add_argument("--g1")
    companion.add_argument("--v1", type=int, default=0)
    companion.add_argument("--g2")
    companion.add_argument("--v2", type=int, default=0)
    companion.add_argument("--L", type=int, required=True)
    companion.add_argument("--c", type=int, required=True)
    companion.add_argument("--q", type=int, default=1)
    companion.add_argument("--q-prime", type=int, default=None)
    companion.add_argument("--out")
    companion.set_defaults(handler=cmd_companion)

    verify = sub.add_parser("verify", parents=[shared], help="run verification suites")
    verify.add_argument("suites", nargs="+", help="suite names or all")
    verify.add_argument("--n", type=int)
    verify.add_argument("--L", type=int)
    verify.add_argument("--c", type=int)
    verify.add_argument("--cases", type=int)
    verify.add_argument("--set", action="append", metavar="SUITE.KEY=VALUE")
    verify.add_argument("--archive", help="directory for run.json and the rendered report")
    verify.set_defaults(handler=cmd_verify)

    config = sub.add_parser("config", parents=[shared], help="show or initialise the settings file")
    config.add_argument("action", choices=["show", "init"])
    config.set_defaults(handler=cmd_config)
    return parser


def _check_companion_arguments(args: argparse.Namespace) -> None:
    if args.command != "companion":
        return
    if args.action == "homogenise":
        if not (args.g1 and args.g2):
            raise InvalidParameterError("companion homogenise needs --g1 and --g2")
        if args.q_prime is None:
            args.q_prime = args.c
    elif not args.graph:
        raise InvalidParameterError(f"companion {args.action} needs --graph")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        settings = _settings(args)
        _check_companion_arguments(args)
        return args.handler(args, settings)
    except WorkbenchError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


__all__ = ["build_parser", "main"]
