"""Rich-based terminal rendering of Betti tables, resolutions and reports."""

from __future__ import annotations

from typing import Iterable

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text
from rich.theme import Theme

from aci_betti import __version__
from aci_betti.models import (BettiTable, DegreeTuple, EntryStatus, GhostTerm,
                              GorensteinProfile, HilbertFunction, Prediction,
                              ResolutionShape, RunReport, TableDiff)

THEME = Theme(
    {
        "header": "bold cyan",
        "bound": "bold yellow",
        "exact": "bold white",
        "twist": "bold magenta",
        "route": "bold blue",
        "ghost": "bold red",
        "success": "bold green",
        "error": "bold red",
        "warn": "bold yellow",
        "info": "bold cyan",
        "muted": "dim",
    }
)

console = Console(theme=THEME)
err_console = Console(theme=THEME, stderr=True)


def print_banner(t: DegreeTuple) -> None:
    banner = Text()
    banner.append("  aci-betti", style="bold cyan")
    banner.append(f" v{__version__}", style="dim")
    banner.append("  ", style="dim")
    banner.append(str(t), style="bold")
    if t.original_order != t.degrees:
        banner.append(f"  (given as {','.join(map(str, t.original_order))})", style="dim italic")
    console.print()
    console.print(Panel(banner, border_style="cyan", padding=(0, 1)))


def _new_table(title: str | None = None) -> Table:
    return Table(title=title, show_header=True, header_style="bold", border_style="dim",
                 padding=(0, 1))


def betti_grid(table: BettiTable, bounds: Iterable[tuple[int, int]] = (),
               title: str | None = None) -> Table:
    """Staircase layout: column i, row j - i; bounded entries show as <=k."""
    bounded = set(bounds)
    grid = _new_table(title)
    grid.add_column("", style="muted", justify="right")
    top = table.length
    for i in range(top + 1):
        grid.add_column(str(i), justify="right")
    rows = sorted({j - i for (i, j), _ in table})
    for r in rows:
        cells = []
        for i in range(top + 1):
            m = table.get(i, i + r)
            if not m:
                cells.append("[muted]-[/muted]")
            elif (i, i + r) in bounded:
                cells.append(f"[bound]≤{m}[/bound]")
            else:
                cells.append(str(m))
        grid.add_row(f"{r}:", *cells)
    return grid


def module_list(shape: ResolutionShape) -> str:
    """``0 → F_L → … → F_1 → R``."""
    parts = [str(shape[i]) for i in range(shape.length, -1, -1)]
    return " → ".join(["0", *parts])


def print_table(table: BettiTable, bounds: Iterable[tuple[int, int]] = (),
                title: str | None = None) -> None:
    console.print()
    console.print(betti_grid(table, bounds, title))
    console.print(f"  [muted]{module_list(table.shape())}[/muted]")


def print_prediction(pred: Prediction) -> None:
    title = f"{pred.module} predicted by [route]{pred.route.value}[/route]"
    print_table(pred.table(), pred.bounds, title)
    if pred.default_status is EntryStatus.UPPER_BOUND:
        print_warning("every entry is an upper bound")
    elif pred.bounds:
        print_info(f"{len(pred.bounds)} entries are upper bounds (shown as ≤k)")
    if pred.conjectural:
        print_warning("exact shape is conjectural for this many variables; verify with compare")
    if pred.ghosts:
        print_ghosts(pred.ghosts)


def print_ghosts(ghosts: list[GhostTerm]) -> None:
    grid = _new_table("Shared twists in consecutive modules")
    grid.add_column("Positions", justify="center")
    grid.add_column("Twist", style="twist", justify="right")
    grid.add_column("Mult", justify="right")
    grid.add_column("Reason", style="muted")
    for g in ghosts:
        grid.add_row(f"{g.position},{g.position + 1}", f"R(-{g.twist})", str(g.multiplicity),
                     g.reason.value)
    console.print()
    console.print(grid)


def print_diff(diffs: list[TableDiff], title: str = "Differences") -> None:
    grid = _new_table(title)
    grid.add_column("i", justify="right")
    grid.add_column("j", justify="right")
    grid.add_column("Predicted", justify="right")
    grid.add_column("Measured", justify="right")
    grid.add_column("Status", style="muted")
    for d in diffs:
        grid.add_row(str(d.i), str(d.j), str(d.predicted), str(d.measured), d.status.value)
    console.print()
    console.print(grid)


def print_hilbert(t: DegreeTuple, functions: dict[str, HilbertFunction],
                  profile: GorensteinProfile | None) -> None:
    print_banner(t)
    print_info(f"classification: {t.classification.value}")
    grid = _new_table()
    grid.add_column("Quotient", style="header", no_wrap=True)
    grid.add_column("Hilbert function")
    grid.add_column("Socle", justify="right", style="muted")
    for name, h in functions.items():
        grid.add_row(name, str(h), str(h.socle_degree))
    console.print()
    console.print(grid)
    if profile is not None:
        peaks = "one peak" if profile.peak_count == 1 else f"{profile.peak_count} peaks"
        growth = ", maximal growth" if profile.maximal_growth else ""
        console.print(f"  [muted]R/G: socle degree {profile.socle_degree}, first peak at "
                      f"{profile.first_peak}, {peaks}{growth}[/muted]")


def print_report(report: RunReport) -> None:
    print_prediction(report.prediction)
    if report.oracle is not None:
        seeds = ",".join(map(str, report.seeds))
        print_table(report.oracle, title=f"Oracle over GF({report.prime}), seeds {seeds}")
    if report.measured_bounds:
        measured = ", ".join(f"β[{i},{j}]={m}" for (i, j), m in sorted(report.measured_bounds.items()))
        print_info(f"measured at bounded entries: {measured}")
    if report.cancellations is not None:
        if report.cancellations:
            pairs = ", ".join(f"{c} at ({i},{i + 1}) twist {j}"
                              for (i, j), c in sorted(report.cancellations.items()))
            print_info(f"fits the bound family with cancellations: {pairs}")
        else:
            print_info("fits the bound family with no cancellations")
    elif not report.prediction.is_exact:
        print_warning("oracle table is outside the predicted family")
    if report.bound_violations:
        print_diff(report.bound_violations, "Upper bounds exceeded")
    if report.seed_disagreements:
        print_warning(f"seeds {report.seed_disagreements} disagreed with the minimum")
    if report.diff:
        print_diff(report.diff)
        print_error(f"{len(report.diff)} exact entries disagree with the oracle")
    else:
        print_success(f"prediction agrees with the oracle ({report.elapsed:.2f}s)")


def print_success(message: str) -> None:
    console.print(f"  [success]✓[/success] {message}")


def print_error(message: str) -> None:
    err_console.print(f"  [error]✗[/error] {message}")


def print_warning(message: str) -> None:
    console.print(f"  [warn]![/warn] {message}")


def print_info(message: str) -> None:
    console.print(f"  [info]ℹ[/info] {message}")
