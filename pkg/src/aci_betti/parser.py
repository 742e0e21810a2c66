"""Parse degree lists from the command line and Betti tables from JSON files."""

from __future__ import annotations

import argparse
import json
from pathlib import Path
from typing import Any

from aci_betti.errors import InvalidInput
from aci_betti.models import BettiTable, DegreeTuple


def parse_degrees(text: str) -> list[int]:
    """``"4,4,4,8"`` -> ``[4, 4, 4, 8]``. Spaces around commas are allowed."""
    parts = [p.strip() for p in text.split(",")]
    if not text.strip() or any(not p for p in parts):
        raise InvalidInput(f"malformed degree list {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise InvalidInput(f"degrees must be integers: {text!r}") from None


def parse_tuple(n: int, text: str) -> DegreeTuple:
    return DegreeTuple.of(n, parse_degrees(text))


def table_from_json(data: dict[str, Any]) -> BettiTable:
    """Read the ``entries`` list of the shared table schema."""
    entries = data.get("entries") if isinstance(data, dict) else None
    if not isinstance(entries, list):
        raise InvalidInput("table JSON needs an 'entries' list")
    items = []
    for entry in entries:
        try:
            items.append(((int(entry["i"]), int(entry["j"])), int(entry["mult"])))
        except (KeyError, TypeError, ValueError):
            raise InvalidInput(f"bad table entry {entry!r}") from None
    return BettiTable.of(items)


def load_table(path: str | Path) -> tuple[BettiTable, dict[str, Any]]:
    """Table and the raw document (so callers can read ``n``/``module``)."""
    try:
        data = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise InvalidInput(f"no such table file: {path}") from None
    except json.JSONDecodeError as e:
        raise InvalidInput(f"{path}: invalid JSON ({e})") from e
    return table_from_json(data), data


# ---------------------------------------------------------------------------
# shared argparse options


def add_tuple_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-n", type=int, required=True, help="number of variables")
    parser.add_argument("-d", "--degrees", required=True, metavar="D1,D2,...",
                        help="comma-separated degrees of the n+1 forms")


def add_oracle_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--prime", type=int, help="field characteristic (default 32003)")
    parser.add_argument("--seed", type=int, help="first random seed (or BETTI_SEED)")
    parser.add_argument("--seeds", type=int, help="number of independent samples")
    parser.add_argument("--retries", type=int, help="resamples allowed per non-generic draw")


def add_json_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="print JSON instead of tables")


def tuple_from_args(args: argparse.Namespace) -> DegreeTuple:
    return parse_tuple(args.n, args.degrees)
