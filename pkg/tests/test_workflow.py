from acr_workbench.models import SuiteReport, Violation
from acr_workbench.suites import SUITES, resolve_suites
from acr_workbench.suites.base import SuiteContext, chunk, run_sharded
from acr_workbench.utils.configuration import WorkbenchSettings, load_settings, save_settings
from acr_workbench.utils.filesystem import ArchiveRepository
from acr_workbench.utils.report_export import render_run
from acr_workbench.workflows.verify_workflow import VerificationWorkflow

SMALL = {
    "family": {"L": 1, "c": 1},
    "appendixA": {"n": 4, "matrix_size": 2, "max_entry": 2, "identity_cases": 20},
    "compiler": {"cases": 20, "spot_checks": 5},
}


def _odd_worker(values):
    return len(values), [Violation(check="odd", detail=str(v)) for v in values if v % 2]


def test_registry_order_and_resolution():
    assert list(SUITES)[:2] == ["lemma32", "appendixA"]
    assert [suite.name for suite in resolve_suites(["family", "compiler"])] == ["family", "compiler"]
    assert len(resolve_suites(["all"])) == len(SUITES)


def test_small_run_passes():
    workflow = VerificationWorkflow.for_names(list(SMALL))
    run = workflow.execute(WorkbenchSettings(seed=3), SMALL)
    assert run.passed, [report.violations[:1] for report in run.reports]
    assert [report.suite for report in run.reports] == list(SMALL)
    assert run.find_report("family").checked == 15
    assert all(report.checked > 0 for report in run.reports)


def test_text_reports_do_not_depend_on_jobs():
    names = ["compiler", "family"]
    single = VerificationWorkflow.for_names(names).execute(WorkbenchSettings(seed=5, jobs=1), SMALL)
    double = VerificationWorkflow.for_names(names).execute(WorkbenchSettings(seed=5, jobs=2), SMALL)
    assert render_run(single) == render_run(double)
    assert render_run(single, "tsv") == render_run(double, "tsv")
    text = render_run(single)
    assert text.startswith("verification run (seed 5)\n")
    assert text.rstrip().endswith("overall: PASS (0 violations)")
    assert single.run_id not in text
    assert single.run_id in render_run(single, timings=True)


def test_sharding_merges_in_payload_order():
    payloads = [list(part) for part in chunk(10, 3)]
    assert [len(part) for part in payloads] == [4, 4, 2]
    checked, violations = run_sharded(_odd_worker, payloads, jobs=1)
    assert checked == 10
    assert [v.detail for v in violations] == ["1", "3", "5", "7", "9"]


def test_archive_round_trip(tmp_path):
    run = VerificationWorkflow.for_names(["family"]).execute(WorkbenchSettings(), {"family": {"L": 1, "c": 1}})
    repository = ArchiveRepository(tmp_path / "runs")
    run_id = repository.save_run(run)
    repository.write_text("report.txt", render_run(run), run_id=run_id)
    assert list(repository.list_runs()) == [run_id]
    restored = repository.load_run(run_id)
    assert restored.passed
    assert restored.reports[0] == run.reports[0]
    assert (tmp_path / "runs" / run_id / "report.txt").is_file()


def test_settings_round_trip(tmp_path):
    settings = WorkbenchSettings.from_dict({"seed": "11", "jobs": 0, "report_format": "xml",
                                            "limits": {"sequence_length": 5, "ef_rounds": -1}})
    assert settings.seed == 11
    assert settings.jobs == 1
    assert settings.report_format == "text"
    assert settings.limits.sequence_length == 5
    assert settings.limits.ef_rounds == 3
    path = save_settings(settings, tmp_path / "settings.json")
    assert load_settings(path).to_dict() == settings.to_dict()
    assert load_settings(tmp_path / "missing.json").seed == 7


def test_suite_report_status():
    report = SuiteReport(suite="demo")
    assert report.passed
    report.violations.append(Violation(check="x", detail="y"))
    assert report.first_counterexample.check == "x"


TINY = {
    "lemma32": {"n": 3, "random_cases": 20},
    "order-gnn": {"n": 3, "random_cases": 10, "max_order": 8},
    "gadget-gnn": {"round_trips": 5, "max_order": 4, "negatives": 12},
    "charformulas": {"pairs": 10, "property_every": 5},
    "companion": {"graphs": 5},
    "invariance": {"pairs": 5, "networks": 2},
    "games": {"graphs": 10},
    "bounded-degree": {"cases": 20},
}


def test_every_suite_passes_on_tiny_budgets():
    run = VerificationWorkflow.for_names(list(TINY)).execute(WorkbenchSettings(seed=1), TINY)
    failing = {report.suite: report.first_counterexample for report in run.reports if not report.passed}
    assert failing == {}
    assert all(report.checked > 0 for report in run.reports)


def test_network_suites_reach_the_acceptance_orders_by_default():
    context = SuiteContext(seed=1)
    assert SUITES["order-gnn"]().parameters(context)["max_order"] == 200
    assert SUITES["gadget-gnn"]().parameters(context)["max_order"] == 50


def test_order_sizes_are_counted_per_shard():
    options = {"order-gnn": {"n": 1, "random_cases": 1, "max_order": 5}}
    for jobs in (1, 2):
        run = VerificationWorkflow.for_names(["order-gnn"]).execute(WorkbenchSettings(seed=1, jobs=jobs), options)
        assert run.reports[0].checked == 2 + 1 + 5
