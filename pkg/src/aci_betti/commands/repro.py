"""repro command: recompute every worked reference table and diff it."""

from __future__ import annotations

import argparse
import time
from typing import TYPE_CHECKING

from rich.table import Table

from aci_betti import report, ui
from aci_betti.errors import InvalidInput
from aci_betti.models import BettiTable
from aci_betti.reference import CASES, ReferenceResult, find, run_case

if TYPE_CHECKING:
    from aci_betti.app import App


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--name", action="append", metavar="CASE",
                        help="replay only this case (repeatable)")
    parser.add_argument("--list", action="store_true", help="list the cases and exit")
    parser.add_argument("--json", action="store_true", help="print JSON instead of tables")


def _result_json(result: ReferenceResult) -> dict:
    def dump(value: object) -> object:
        if isinstance(value, BettiTable):
            return report.table_json(value, 0)["entries"]
        return list(value)  # type: ignore[call-overload]

    return {
        "name": result.case.name,
        "ok": result.ok,
        "expected": dump(result.case.expected),
        "actual": dump(result.actual),
        "bounds": sorted(list(b) for b in result.bounds),
    }


def cmd_repro(app: App, args: argparse.Namespace) -> int:
    if args.list:
        for case in CASES:
            ui.console.print(f"  [header]{case.name}[/header]  [muted]{case.description}[/muted]")
        return 0

    cases = list(CASES)
    if args.name:
        cases = []
        for name in args.name:
            case = find(name)
            if case is None:
                raise InvalidInput(f"unknown reference case {name!r}; see repro --list")
            cases.append(case)

    started = time.perf_counter()
    results = [run_case(case) for case in cases]
    elapsed = time.perf_counter() - started
    failed = [r for r in results if not r.ok]

    if args.json:
        app.emit({"cases": [_result_json(r) for r in results], "failed": len(failed),
                  "elapsed": round(elapsed, 3)})
        return 1 if failed else 0

    grid = Table(show_header=True, header_style="bold", border_style="dim", padding=(0, 1))
    grid.add_column("Case", style="header", no_wrap=True)
    grid.add_column("", width=2)
    grid.add_column("Description", style="muted")
    for r in results:
        mark = "[success]✓[/success]" if r.ok else "[error]✗[/error]"
        grid.add_row(r.case.name, mark, r.case.description)
    ui.console.print()
    ui.console.print(grid)

    for r in failed:
        if isinstance(r.actual, BettiTable) and isinstance(r.case.expected, BettiTable):
            ui.print_table(r.case.expected, r.case.bounds, f"{r.case.name}: expected")
            ui.print_table(r.actual, r.bounds, f"{r.case.name}: computed")
        else:
            ui.print_error(f"{r.case.name}: expected {r.case.expected}, computed {r.actual}")
        if r.case.ghosts is not None and r.ghosts != r.case.ghosts:
            ui.print_error(f"{r.case.name}: ghosts {r.ghosts}, expected {r.case.ghosts}")

    if failed:
        ui.print_error(f"{len(failed)} of {len(results)} reference cases differ")
        return 1
    ui.print_success(f"all {len(results)} reference cases reproduced ({elapsed:.2f}s)")
    return 0
