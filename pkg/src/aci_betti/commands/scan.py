"""scan command: walk a box of degree tuples, one JSON object per tuple.

Equal-degree scans run the oracle and report twists shared by consecutive
modules; general scans report the ghost terms of each prediction. Tuples are
worked on in a process pool; the parent emits rows in box order and records
the last emitted tuple in a cursor file so an interrupted scan resumes.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import combinations_with_replacement
from pathlib import Path
from typing import TYPE_CHECKING, Any, Callable, Iterator

from aci_betti import config, oracle, predictor, report, ui
from aci_betti.betti import consecutive_overlaps
from aci_betti.errors import BettiError, InvalidInput
from aci_betti.models import (Classification, DegreeTuple, GhostReason,
                              OracleSettings)
from aci_betti.parser import add_json_option, add_oracle_options

if TYPE_CHECKING:
    from aci_betti.app import App

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScanRow:
    degrees: DegreeTuple
    doc: dict[str, Any]
    hit: bool
    show: bool


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-n", type=int, required=True, help="number of variables")
    parser.add_argument("--max-d", type=int, default=8, help="largest degree in the box")
    parser.add_argument("--min-d", type=int, default=2, help="smallest degree in the box")
    parser.add_argument("--equal-degrees", action="store_true",
                        help="scan n+1 forms of one degree with the oracle")
    parser.add_argument("--max-a", type=int, default=6, help="largest common degree")
    parser.add_argument("--ghosts", action="store_true",
                        help="only report tuples with a non-splitting overlap")
    parser.add_argument("--verify", action="store_true",
                        help="also run the oracle on each general tuple")
    parser.add_argument("--cursor", metavar="FILE", help="resume file (default from config)")
    parser.add_argument("--reset", action="store_true", help="ignore the saved cursor")
    parser.add_argument("-j", "--jobs", type=int, metavar="N",
                        help="worker processes (default: one less than the CPU count)")
    add_oracle_options(parser)
    add_json_option(parser)


def scan_key(args: argparse.Namespace) -> str:
    if args.equal_degrees:
        return f"equal:n={args.n}:a<={args.max_a}"
    return f"box:n={args.n}:{args.min_d}..{args.max_d}:ghosts={args.ghosts}"


def tuples_in_box(n: int, min_d: int, max_d: int) -> Iterator[DegreeTuple]:
    """Proper tuples with min_d <= d_1 <= ... <= d_{n+1} <= max_d, in lex order."""
    for degrees in combinations_with_replacement(range(min_d, max_d + 1), n + 1):
        t = DegreeTuple(n=n, degrees=degrees)
        if t.classification is Classification.PROPER_ACI:
            yield t


def equal_degree_tuples(n: int, max_a: int) -> Iterator[DegreeTuple]:
    for a in range(2, max_a + 1):
        yield DegreeTuple(n=n, degrees=(a,) * (n + 1))


def read_cursor(path: Path, key: str) -> tuple[int, ...] | None:
    if not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError:
        logger.warning("ignoring unreadable cursor file %s", path)
        return None
    if data.get("scan") != key:
        return None
    return tuple(data.get("last", ())) or None


def write_cursor(path: Path, key: str, t: DegreeTuple) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps({"scan": key, "last": list(t.degrees)}, sort_keys=True) + "\n")


def _overlap_json(overlaps: list[tuple[int, int, int]]) -> list[dict]:
    return [{"positions": [i, i + 1], "twist": j, "mult": m} for i, j, m in overlaps]


def scan_equal(t: DegreeTuple, settings: OracleSettings) -> dict[str, Any]:
    run = oracle.stable_betti(t, settings.field_config, seeds=settings.seeds,
                              retries=settings.retries)
    return {
        "degrees": list(t.degrees),
        "n": t.n,
        "overlaps": _overlap_json(consecutive_overlaps(run.table)),
        "oracle": report.oracle_json(run.table, t.n, "R/I", run.seeds, settings.prime),
    }


def scan_general(t: DegreeTuple, settings: OracleSettings | None) -> dict[str, Any]:
    pred = predictor.predict(t)
    doc: dict[str, Any] = {
        "degrees": list(t.degrees),
        "n": t.n,
        "source": pred.route.value,
        "status": "exact" if pred.is_exact else "bound",
        "ghosts": [report.ghost_json(g) for g in pred.ghosts],
    }
    if settings is not None:
        run = oracle.stable_betti(t, settings.field_config, seeds=settings.seeds,
                                  retries=settings.retries)
        doc["overlaps"] = _overlap_json(consecutive_overlaps(run.table))
        doc["matches"] = run.table == pred.table()
    return doc


def _has_true_ghost(doc: dict[str, Any]) -> bool:
    return any(g["reason"] == GhostReason.NON_SPLITTING_OVERLAP.value for g in doc["ghosts"])


def default_jobs() -> int:
    return max(1, (os.cpu_count() or 2) - 1)


def scan_one(t: DegreeTuple, *, equal: bool, ghosts_only: bool,
             settings: OracleSettings | None) -> ScanRow:
    """Worker body: the document for one tuple, whether it is flagged, whether it is shown."""
    try:
        if equal and settings is not None:
            doc = scan_equal(t, settings)
            return ScanRow(t, doc, hit=bool(doc["overlaps"]), show=True)
        doc = scan_general(t, settings)
        hit = _has_true_ghost(doc) or doc.get("matches") is False
        return ScanRow(t, doc, hit=hit, show=hit or not ghosts_only)
    except BettiError as exc:
        logger.warning("%s: %s", t, exc)
        return ScanRow(t, {"degrees": list(t.degrees), "n": t.n, "error": str(exc)},
                       hit=True, show=True)


def run_rows(work: Callable[[DegreeTuple], ScanRow], tuples: list[DegreeTuple],
             jobs: int) -> Iterator[ScanRow]:
    """Rows in the order of tuples; with jobs > 1 they are computed in worker processes."""
    if jobs == 1:
        yield from map(work, tuples)
        return
    pool = ProcessPoolExecutor(max_workers=jobs)
    try:
        yield from pool.map(work, tuples)
    finally:
        pool.shutdown(cancel_futures=True)


def cmd_scan(app: App, args: argparse.Namespace) -> int:
    if args.n < 2:
        raise InvalidInput(f"need at least 2 variables, got n={args.n}")
    jobs = default_jobs() if args.jobs is None else args.jobs
    if jobs < 1:
        raise InvalidInput(f"--jobs must be at least 1, got {jobs}")
    settings = config.load_settings(prime=args.prime, seed=args.seed, seeds=args.seeds,
                                    retries=args.retries)
    path = config.cursor_path(args.cursor)
    key = scan_key(args)
    resume_after = None if args.reset else read_cursor(path, key)
    if resume_after:
        logger.info("resuming %s after %s", key, resume_after)

    if args.equal_degrees:
        tuples: Iterator[DegreeTuple] = equal_degree_tuples(args.n, args.max_a)
    else:
        tuples = tuples_in_box(args.n, args.min_d, args.max_d)
    pending = [t for t in tuples if resume_after is None or t.degrees > resume_after]
    work = partial(scan_one, equal=args.equal_degrees, ghosts_only=args.ghosts,
                   settings=settings if args.equal_degrees or args.verify else None)
    logger.info("scanning %d tuples with %d worker(s)", len(pending), jobs)

    scanned = reported = flagged = 0
    for row in run_rows(work, pending, jobs):
        scanned += 1
        flagged += row.hit
        if row.show:
            reported += 1
            if args.json:
                app.emit(row.doc, indent=None)
            else:
                _print_row(row.degrees, row.doc, row.hit)
        write_cursor(path, key, row.degrees)
        logger.info("scanned %s", row.degrees)

    if not args.json:
        ui.print_success(f"scanned {scanned} tuples, reported {reported}, flagged {flagged}")
    if args.equal_degrees and flagged:
        return 1
    return 0


def _print_row(t: DegreeTuple, doc: dict[str, Any], hit: bool) -> None:
    if "error" in doc:
        ui.print_error(f"{t}  {doc['error']}")
        return
    if "source" in doc:
        ghosts = ", ".join(f"R(-{g['twist']}) at {tuple(g['positions'])}" for g in doc["ghosts"])
        line = f"{t}  [route]{doc['source']}[/route]  {ghosts or 'no ghosts'}"
    else:
        shared = ", ".join(f"R(-{o['twist']}) at {tuple(o['positions'])}" for o in doc["overlaps"])
        line = f"{t}  {shared or 'no shared twists'}"
    if hit:
        ui.print_warning(line)
    else:
        ui.print_info(line)
