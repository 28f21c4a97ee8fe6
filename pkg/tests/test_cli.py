import pytest

from acr_workbench.cli import main
from acr_workbench.graphs.fgr import load_graph, read_graph


@pytest.fixture
def config(tmp_path):
    return ["--config", str(tmp_path / "settings.json")]


def test_order_check_on_a_catalog_graph(config, capsys):
    assert main(config + ["order-check", "order5"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "strict_linear_order: True"
    assert "hom_p2: 10" in out


def test_unknown_graph_is_a_usage_error(config, capsys):
    assert main(config + ["order-check", "no-such-graph"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_gen_writes_fgr(config, capsys, tmp_path):
    assert main(config + ["gen", "order", "--n", "3"]) == 0
    graph = read_graph(capsys.readouterr().out)
    assert graph.edges == frozenset({(0, 1), (0, 2), (1, 2)})
    target = tmp_path / "cycle.fgr"
    assert main(config + ["gen", "cycle", "--n", "4", "--out", str(target)]) == 0
    assert load_graph(target).n == 4


def test_gml_eval_and_print(config, capsys):
    assert main(config + ["gml", "eval", "--formula", "<>=2 T", "--graph", "order5"]) == 0
    assert capsys.readouterr().out == "0 1 2\n"
    assert main(config + ["gml", "print", "--formula", "(p1 | p2)"]) == 0
    assert capsys.readouterr().out == "!(!p1 & !p2)\n"
    assert main(config + ["gml", "print", "--formula", "(p1 &"]) == 2


def test_gnn_run_on_orders(config, capsys):
    assert main(config + ["gnn", "run", "--net", "linear-order", "--graph", "order5"]) == 0
    assert capsys.readouterr().out == "1 1 1 1 1\n"
    assert main(config + ["gnn", "run", "--net", "linear-order", "--graph", "cycle3", "--vertex", "1"]) == 0
    assert capsys.readouterr().out == "0\n"


def test_bisim_command(config, capsys):
    assert main(config + ["bisim", "--g1", "order5", "--v1", "0", "--g2", "order5", "--v2", "4",
                          "--L", "1", "--c", "1", "--search"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "bisimilar (none): false"
    assert out[1] == "game search: false"


def test_family_command_writes_artefacts(config, capsys, tmp_path):
    outdir = tmp_path / "family"
    assert main(config + ["family", "--L", "1", "--c", "1", "--outdir", str(outdir)]) == 0
    assert "status: PASS" in capsys.readouterr().out
    assert load_graph(outdir / "G.fgr").n == 15
    assert (outdir / "report.txt").is_file()


def test_companion_saturate(config, capsys):
    assert main(config + ["companion", "saturate", "--graph", "order5", "--L", "1", "--c", "1"]) == 0
    assert capsys.readouterr().out.startswith("saturate: PASS\n")
    assert main(config + ["companion", "homogenise", "--g1", "order5", "--L", "1", "--c", "1"]) == 2


def test_verify_family(config, capsys, tmp_path):
    archive = tmp_path / "runs"
    assert main(config + ["verify", "family", "--L", "1", "--c", "1", "--archive", str(archive)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("verification run (seed 7)\n")
    assert "[family] PASS" in out
    assert len(list(archive.iterdir())) == 1


def test_verify_rejects_unknown_suites(config):
    assert main(config + ["verify", "nonsense"]) == 2


def test_config_init_and_show(config, capsys, tmp_path):
    assert main(config + ["--seed", "9", "config", "init"]) == 0
    capsys.readouterr()
    assert main(config + ["config", "show"]) == 0
    assert '"seed": 9' in capsys.readouterr().out


def test_global_options_follow_the_subcommand(config, capsys):
    argv = ["verify", "compiler", "--cases", "2", "--seed", "11", "--set", "compiler.spot_checks=1"]
    assert main(config + argv) == 0
    out = capsys.readouterr().out
    assert out.startswith("verification run (seed 11)\n")
    assert "[compiler] PASS" in out


def test_top_level_options_survive_the_subcommand(config, capsys):
    assert main(config + ["--seed", "9", "config", "show"]) == 0
    assert '"seed": 9' in capsys.readouterr().out
    assert main(config + ["config", "show", "--seed", "5", "--jobs", "2"]) == 0
    out = capsys.readouterr().out
    assert '"seed": 5' in out
    assert '"jobs": 2' in out
