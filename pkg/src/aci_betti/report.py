"""Deterministic JSON for tables, predictions, oracle runs and compare reports.

Every document shares ``{"n", "module", "entries", "status"}``; entries are
``{"i", "j", "mult"}`` sorted by (i, j). :func:`dumps` sorts keys so the same
input always yields the same bytes.
"""

from __future__ import annotations

import json
from typing import Any

from aci_betti.models import (BettiTable, DegreeTuple, EntryStatus, GhostTerm,
                              GorensteinProfile, HilbertFunction, Prediction,
                              RunReport, TableDiff)


def _entries(table: BettiTable, status: dict[tuple[int, int], EntryStatus] | None = None) -> list[dict]:
    out = []
    for (i, j), m in sorted(table):
        entry: dict[str, Any] = {"i": i, "j": j, "mult": m}
        if status is not None:
            entry["status"] = status[(i, j)].value
        out.append(entry)
    return out


def table_json(table: BettiTable, n: int, module: str = "R/I", status: str = "exact") -> dict:
    return {"n": n, "module": module, "entries": _entries(table), "status": status}


def ghost_json(ghost: GhostTerm) -> dict:
    return {"positions": list(ghost.positions), "twist": ghost.twist,
            "mult": ghost.multiplicity, "reason": ghost.reason.value}


def prediction_json(pred: Prediction) -> dict:
    doc = {
        "n": pred.n,
        "module": pred.module,
        "entries": _entries(pred.table(), pred.entry_status),
        "status": EntryStatus.EXACT.value if pred.is_exact else EntryStatus.UPPER_BOUND.value,
        "source": pred.route.value,
        "conjectural": pred.conjectural,
        "ghosts": [ghost_json(g) for g in pred.ghosts],
    }
    if pred.degrees is not None:
        doc["degrees"] = list(pred.degrees.degrees)
    if pred.gorenstein is not None:
        doc["gorenstein"] = prediction_json(pred.gorenstein)
    return doc


def oracle_json(table: BettiTable, n: int, module: str, seeds: list[int], prime: int) -> dict:
    doc = table_json(table, n, module, status="oracle")
    doc["seeds"] = list(seeds)
    doc["prime"] = prime
    return doc


def _diff_json(d: TableDiff) -> dict:
    return {"i": d.i, "j": d.j, "predicted": d.predicted, "measured": d.measured,
            "status": d.status.value}


def _keyed(values: dict[tuple[int, int], int]) -> list[dict]:
    return [{"i": i, "j": j, "mult": m} for (i, j), m in sorted(values.items())]


def run_report_json(report: RunReport) -> dict:
    doc: dict[str, Any] = {
        "degrees": list(report.degrees.degrees),
        "n": report.degrees.n,
        "prediction": prediction_json(report.prediction),
        "diff": [_diff_json(d) for d in report.diff],
        "bound_violations": [_diff_json(d) for d in report.bound_violations],
        "measured_bounds": _keyed(report.measured_bounds),
        "cancellations": None if report.cancellations is None else _keyed(report.cancellations),
        "seed_disagreements": list(report.seed_disagreements),
        "ok": report.ok,
        "elapsed": round(report.elapsed, 3),
    }
    if report.oracle is not None:
        doc["oracle"] = oracle_json(report.oracle, report.degrees.n, report.prediction.module,
                                    report.seeds, report.prime)
    return doc


def hilbert_json(t: DegreeTuple, functions: dict[str, HilbertFunction],
                 profile: GorensteinProfile | None) -> dict:
    doc: dict[str, Any] = {
        "n": t.n,
        "degrees": list(t.degrees),
        "classification": t.classification.value,
        "hilbert": {name: list(h) for name, h in functions.items()},
    }
    if profile is not None:
        doc["gorenstein_profile"] = {
            "socle_degree": profile.socle_degree,
            "first_peak": profile.first_peak,
            "peak_count": profile.peak_count,
            "maximal_growth": profile.maximal_growth,
        }
    return doc


def dumps(doc: Any, indent: int | None = 2) -> str:
    return json.dumps(doc, sort_keys=True, indent=indent)
