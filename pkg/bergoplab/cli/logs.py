"""
One-screen summary of a report
"""

from typing import Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from ..models.criteria import CriterionReport, Verdict

VERDICT_STYLES = {
    Verdict.COMPACT: "green",
    Verdict.FINITE: "green",
    Verdict.BOUNDED: "yellow",
    Verdict.UNBOUNDED: "red",
    Verdict.DIVERGENT: "red",
    Verdict.INDETERMINATE: "magenta",
}

MAX_QUANTITY_ROWS = 20


def _format_value(value: Optional[float]) -> str:
    return "-" if value is None else f"{value:.6g}"


def _verdict_rows(table: Table, report: CriterionReport, scope: str = "") -> None:
    for name, verdict in report.verdicts.items():
        verdict = Verdict(verdict)
        style = VERDICT_STYLES.get(verdict, "white")
        table.add_row(f"{scope}{name}", f"[{style}]{verdict.value}[/{style}]")
    for sub in report.sub_reports:
        _verdict_rows(table, sub, f"{scope}{sub.criterion}/")


def print_summary(report: CriterionReport, status: int, console: Optional[Console] = None) -> None:
    """Quantities (first rows), verdicts and cross-checks of a report"""
    console = console or Console()

    quantities = Table(title=f"{report.criterion}: quantities", show_lines=False)
    quantities.add_column("name", style="cyan")
    quantities.add_column("value", justify="right")
    quantities.add_column("flags", style="yellow")
    for item in report.quantities[:MAX_QUANTITY_ROWS]:
        quantities.add_row(item.name, _format_value(item.value), ", ".join(item.flags))
    if len(report.quantities) > MAX_QUANTITY_ROWS:
        quantities.caption = f"{len(report.quantities) - MAX_QUANTITY_ROWS} more in the report file"
    console.print(quantities)

    verdicts = Table(title="verdicts")
    verdicts.add_column("name", style="cyan")
    verdicts.add_column("verdict")
    _verdict_rows(verdicts, report)
    console.print(verdicts)

    if report.cross_checks:
        checks = Table(title="cross-checks")
        checks.add_column("check", style="cyan")
        checks.add_column("sides")
        checks.add_column("agree")
        for check in report.cross_checks:
            sides = ", ".join(f"{k}: {v}" for k, v in check.sides.items())
            agree = "[green]yes[/green]" if check.agree else "[red]no[/red]"
            checks.add_row(check.name, sides, agree)
        console.print(checks)

    coherent = "coherent" if report.coherent else "[red]incoherent[/red]"
    console.print(Panel(f"exit status {status}, cross-checks {coherent}", title="berg-op-lab"))
