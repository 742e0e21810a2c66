"""compare command: prediction against the finite-field oracle."""

from __future__ import annotations

import argparse
import time
from typing import TYPE_CHECKING

from aci_betti import config, oracle, predictor, report, ui
from aci_betti.betti import koszul_resolution
from aci_betti.errors import InvalidInput
from aci_betti.models import (BettiTable, DegreeTuple, EntryStatus, Prediction,
                              Route, RunReport, TableDiff)
from aci_betti.parser import (add_json_option, add_oracle_options,
                              add_tuple_options, load_table, tuple_from_args)

if TYPE_CHECKING:
    from aci_betti.app import App


def configure(parser: argparse.ArgumentParser) -> None:
    add_tuple_options(parser)
    add_oracle_options(parser)
    add_json_option(parser)
    parser.add_argument("--module", choices=oracle.MODULES, default="R/I",
                        help="quotient to resolve (default R/I)")
    parser.add_argument("--table", metavar="FILE",
                        help="compare against a saved table JSON instead of running the oracle")


def prediction_for(t: DegreeTuple, module: str) -> Prediction:
    if module == "R/I":
        return predictor.predict(t)
    if module == "R/J":
        return Prediction(shape=koszul_resolution(t.regular), route=Route.KOSZUL, n=t.n,
                          degrees=t, module="R/J")
    gor = predictor.predict(t).gorenstein
    if gor is None:
        raise InvalidInput(f"{t}: the chosen route has no linked Gorenstein resolution")
    return gor


def diff_tables(pred: Prediction, measured: BettiTable) -> tuple[list[TableDiff], list[TableDiff]]:
    """Exact entries that disagree, and bounded entries the measurement exceeds."""
    predicted = pred.table()
    keys = sorted({key for key, _ in predicted} | {key for key, _ in measured})
    diff: list[TableDiff] = []
    violations: list[TableDiff] = []
    for i, j in keys:
        p, m = predicted.get(i, j), measured.get(i, j)
        status = pred.status(i, j)
        entry = TableDiff(i=i, j=j, predicted=p, measured=m, status=status)
        if status is EntryStatus.EXACT and p != m:
            diff.append(entry)
        elif status is EntryStatus.UPPER_BOUND and m > p:
            violations.append(entry)
    return diff, violations


def build_report(t: DegreeTuple, pred: Prediction, measured: BettiTable, *,
                 seeds: list[int] | None = None, disagreements: list[int] | None = None,
                 prime: int = 32003, elapsed: float = 0.0) -> RunReport:
    diff, violations = diff_tables(pred, measured)
    run = RunReport(degrees=t, prediction=pred, oracle=measured, diff=diff,
                    bound_violations=violations, seeds=seeds or [],
                    seed_disagreements=disagreements or [], prime=prime, elapsed=elapsed)
    if not pred.is_exact:
        run.measured_bounds = predictor.measured_bounds(pred, measured)
        run.cancellations = predictor.family_fit(pred, measured)
    return run


def cmd_compare(app: App, args: argparse.Namespace) -> int:
    t = tuple_from_args(args)
    settings = config.load_settings(prime=args.prime, seed=args.seed, seeds=args.seeds,
                                    retries=args.retries)
    started = time.perf_counter()
    pred = prediction_for(t, args.module)

    if args.table:
        measured, doc = load_table(args.table)
        if doc.get("n", t.n) != t.n:
            raise InvalidInput(f"{args.table} is for n={doc.get('n')}, not n={t.n}")
        run = build_report(t, pred, measured, seeds=list(doc.get("seeds", [])),
                           prime=int(doc.get("prime", settings.prime)),
                           elapsed=time.perf_counter() - started)
    else:
        with app.status(f"resolving {args.module} for {t} over GF({settings.prime})"):
            measured_run = oracle.stable_betti(t, settings.field_config, seeds=settings.seeds,
                                               retries=settings.retries, module=args.module)
        run = build_report(t, pred, measured_run.table, seeds=measured_run.seeds,
                           disagreements=measured_run.disagreements, prime=settings.prime,
                           elapsed=time.perf_counter() - started)

    if args.json:
        app.emit(report.run_report_json(run))
    else:
        ui.print_banner(t)
        ui.print_report(run)
    return 0 if run.ok else 1
