"""
berg-op-lab CLI - boundedness, compactness and Schatten membership of
differences of weighted composition operators.
"""

import sys
from pathlib import Path
from typing import Optional

import click
from loguru import logger
from rich.console import Console

from ..criteria.battery import bergman_battery, run_battery, run_hardy_battery
from ..criteria.embedding import evaluate_embedding_criterion, evaluate_lp_average_criterion
from ..criteria.schatten import evaluate_schatten_criterion
from ..models.config import OutputFormat, RunConfig, Task
from ..models.criteria import CriterionParams, CriterionReport
from ..utils.config import config
from ..utils.errors import LabError
from ..utils.logging import setup_logging
from .config_io import parse_config
from .logs import print_summary
from .runner import EXIT_CLEAN, EXIT_ERROR, EXIT_INDETERMINATE, render_report, run_report

console = Console()


def load_run_config(
    path: str, task: Task, out: Optional[str], fmt: Optional[str], seed: Optional[int]
) -> RunConfig:
    """parse_config plus command-line overrides"""
    cfg = parse_config(Path(path).read_text(encoding="utf-8"), task)
    output = cfg.output.model_copy(
        update={k: v for k, v in (("path", out), ("format", fmt)) if v is not None}
    )
    numerics = cfg.numerics if seed is None else cfg.numerics.model_copy(update={"seed": seed})
    return cfg.model_copy(update={"output": output, "numerics": numerics})


def run_task(
    task: Task,
    config_path: str,
    out: Optional[str],
    fmt: Optional[str],
    seed: Optional[int],
    debug: bool,
) -> int:
    setup_logging("DEBUG" if debug else None)
    try:
        cfg = load_run_config(config_path, task, out, fmt, seed)
    except (LabError, OSError) as e:
        logger.error(f"config error: {e}")
        return EXIT_ERROR

    status, report = run_report(cfg)
    if report is not None:
        print_summary(report, status, console)
    return status


@click.group()
@click.version_option(str(config.get("app", "version", default="0.1.0")), prog_name="berg-op-lab")
def cli():
    """berg-op-lab - numerical lab for differences of weighted composition operators."""
    pass


def _task_command(task: Task, summary: str) -> None:
    @cli.command(name=task.value, help=summary)
    @click.option(
        "--config",
        "config_path",
        type=click.Path(exists=True, dir_okay=False),
        required=True,
    )
    @click.option("--out", "-o", help="Report file (overrides output.path)", default=None)
    @click.option(
        "--format",
        "fmt",
        type=click.Choice([f.value for f in OutputFormat]),
        help="Report format (overrides output.format)",
        default=None,
    )
    @click.option("--seed", type=int, help="Seed of the randomized trials", default=None)
    @click.option("--debug", is_flag=True, help="Enable verbose debug logging", default=False)
    def command(
        config_path: str, out: Optional[str], fmt: Optional[str], seed: Optional[int], debug: bool
    ):
        sys.exit(run_task(task, config_path, out, fmt, seed, debug))


_task_command(Task.NORMS, "Operator and Hilbert-Schmidt norms of the truncated operators.")
_task_command(Task.SCHATTEN, "Schatten-class membership of the difference.")
_task_command(Task.CARLESON, "Averaging-function statistics of the four difference measures.")
_task_command(Task.CRITERIA, "Evaluate a characterization criterion with its cross-checks.")
_task_command(Task.LATTICE, "Build r-lattices and check separation, covering and multiplicity.")
_task_command(Task.HARDY, "Three-way compactness reading of C_(u,phi) - C_psi on H^2.")


@cli.command()
@click.option("--out", "-o", help="Directory for one JSON report per case", default=None)
@click.option("--seed", type=int, help="Seed of the randomized trials", default=None)
@click.option("--debug", is_flag=True, help="Enable verbose debug logging", default=False)
def battery(out: Optional[str], seed: Optional[int], debug: bool):
    """Run the shipped battery through the embedding, averaging, Schatten and Hardy criteria."""
    setup_logging("DEBUG" if debug else None)
    params = CriterionParams() if seed is None else CriterionParams(seed=seed)
    cases = bergman_battery()
    embedding_cases = [case for case in cases if case.sp.p <= case.sp.target_exponent]
    average_cases = [case for case in cases if case.sp.target_exponent < case.sp.p]
    hilbert_cases = [case for case in cases if case.sp.target_exponent == case.sp.p]

    try:
        runs = [
            ("embedding", run_battery(embedding_cases, evaluate_embedding_criterion, params)),
            ("lp_average", run_battery(average_cases, evaluate_lp_average_criterion, params)),
            ("schatten", run_battery(hilbert_cases, evaluate_schatten_criterion, params)),
            ("hardy", run_hardy_battery(params=params)),
        ]
    except LabError as e:
        logger.error(f"battery failed: {e}")
        sys.exit(EXIT_ERROR)

    status = EXIT_CLEAN
    for name, reports in runs:
        for report in reports:
            _write_case(out, name, report)
            if report.indeterminate or not report.coherent:
                status = EXIT_INDETERMINATE
            mark = "[green]ok[/green]" if report.coherent else "[red]incoherent[/red]"
            console.print(f"{name:>10}  {report.params.get('case', '?'):<28} {mark}")
    sys.exit(status)


def _write_case(out: Optional[str], name: str, report: CriterionReport) -> None:
    if out is None:
        return
    target = Path(out) / f"{name}-{report.params.get('case', report.criterion)}.json"
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(render_report(report, OutputFormat.JSON), encoding="utf-8")


if __name__ == "__main__":
    cli()
