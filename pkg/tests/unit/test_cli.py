"""
Run configs, report rendering and the command line
"""

import json

import pytest
from click.testing import CliRunner

from bergoplab.cli import emit_config, parse_config, render_report, run_report
from bergoplab.cli.main import cli
from bergoplab.cli.runner import EXIT_CLEAN, EXIT_ERROR
from bergoplab.models import OutputFormat, Task
from bergoplab.utils.errors import ConfigError

HALF_MAP = """\
task: {task}
u: {{poly: [1]}}
v: {{poly: [0]}}
phi: {{poly: [0, 0.5]}}
psi: {{poly: [0]}}
alpha: 0
"""

FAST_NUMERICS = """\
numerics:
  M: 80
  radii: [0.3, 0.5, 0.7, 0.95, 0.97, 0.99]
"""


def test_minimal_config_takes_the_defaults():
    cfg = parse_config("task: norms\n")
    assert cfg.numerics.M == 200
    assert cfg.numerics.r == 1.0
    assert cfg.numerics.tol_tail == pytest.approx(0.15)
    assert cfg.output.format == OutputFormat.JSON.value
    assert cfg.phi(0.5) == 0.5


def test_alpha_range_is_reported_with_its_line():
    with pytest.raises(ConfigError, match="alpha > -1") as info:
        parse_config("task: norms\nalpha: -1.5\n")
    assert info.value.field == "alpha"
    assert "(line 2)" in str(info.value)


def test_averaging_criterion_needs_q_below_p():
    text = "task: criteria\ncriterion: lp_average\np: 2\nq: 4\n"
    with pytest.raises(ConfigError, match="0<q<p<inf"):
        parse_config(text)


def test_default_criterion_follows_the_exponents():
    with pytest.raises(ConfigError, match="0<q<p<inf"):
        parse_config("task: criteria\ncriterion: atomic\np: 2\nq: 2\n")
    parse_config("task: criteria\np: 4\nq: 2\n")


@pytest.mark.parametrize(
    "text, field",
    [
        ("task: norms\nphi: {poly: [0, 1.1]}\n", "phi"),
        ("task: norms\nnumerics: {Mx: 3}\n", "numerics.Mx"),
        ("task: norms\nu: {taylor: [1]}\n", "u"),
        ("task: sideways\n", "task"),
        ("task: schatten\nnumerics: {beta: 1.0}\n", "numerics.beta"),
    ],
)
def test_config_errors_name_the_field(text, field):
    with pytest.raises(ConfigError) as info:
        parse_config(text)
    assert info.value.field == field


def test_malformed_yaml():
    with pytest.raises(ConfigError, match="malformed YAML"):
        parse_config("task: [norms\n")


def test_task_must_match_the_command():
    with pytest.raises(ConfigError, match="command is 'norms'"):
        parse_config("task: schatten\n", Task.NORMS)
    assert parse_config("alpha: 1\n", Task.NORMS).task == Task.NORMS


def test_emit_parse_round_trip():
    text = (
        HALF_MAP.format(task="criteria")
        + "criterion: linear_sum\na: [1, 0.5]\nb: 1\n"
        + FAST_NUMERICS
    )
    cfg = parse_config(text)
    assert cfg.a == 1 + 0.5j
    assert parse_config(emit_config(cfg)) == cfg


def test_norms_report(tmp_path):
    out = tmp_path / "norms.json"
    text = HALF_MAP.format(task="norms") + f"output: {{path: {out}}}\n"
    status, report = run_report(parse_config(text))
    assert status == EXIT_CLEAN
    assert report.quantity("combo:hs_sq") == pytest.approx(4.0 / 3.0, rel=1e-10)
    assert report.quantity("difference:hs_integral") == pytest.approx(4.0 / 3.0, abs=1e-3)
    document = json.loads(out.read_text(encoding="utf-8"))
    assert document["provenance"]["config"]["task"] == "norms"


def test_csv_reports_are_deterministic(tmp_path):
    text = HALF_MAP.format(task="lattice")
    renders = []
    for _ in range(2):
        status, report = run_report(parse_config(text))
        assert status == EXIT_CLEAN
        renders.append(render_report(report, OutputFormat.CSV))
    assert renders[0] == renders[1]
    assert renders[0].splitlines()[0] == "scope,kind,name,value,flags"


@pytest.mark.slow
def test_schatten_report_of_the_half_map():
    status, report = run_report(parse_config(HALF_MAP.format(task="schatten") + FAST_NUMERICS))
    assert status == EXIT_CLEAN
    assert report.quantity("hs:frobenius_sq") == pytest.approx(4.0 / 3.0, rel=1e-10)


def test_command_exit_codes(tmp_path):
    runner = CliRunner()
    good = tmp_path / "norms.yaml"
    good.write_text(HALF_MAP.format(task="norms"), encoding="utf-8")
    report = tmp_path / "out" / "norms.csv"
    result = runner.invoke(
        cli, ["norms", "--config", str(good), "--out", str(report), "--format", "csv"]
    )
    assert result.exit_code == EXIT_CLEAN
    assert report.read_text(encoding="utf-8").startswith("scope,kind,name,value,flags")

    bad = tmp_path / "bad.yaml"
    bad.write_text("task: norms\nalpha: -1.5\n", encoding="utf-8")
    result = runner.invoke(cli, ["norms", "--config", str(bad)])
    assert result.exit_code == EXIT_ERROR

    result = runner.invoke(cli, ["schatten", "--config", str(good)])
    assert result.exit_code == EXIT_ERROR


def test_version_option():
    result = CliRunner().invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "berg-op-lab" in result.output
