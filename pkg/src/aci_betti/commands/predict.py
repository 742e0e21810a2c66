"""predict command: closed-form Betti table for a degree tuple."""

from __future__ import annotations

import argparse
from typing import TYPE_CHECKING

from aci_betti import predictor, report, ui
from aci_betti.models import IndexConvention
from aci_betti.parser import add_json_option, add_tuple_options, tuple_from_args

if TYPE_CHECKING:
    from aci_betti.app import App


def configure(parser: argparse.ArgumentParser) -> None:
    add_tuple_options(parser)
    add_json_option(parser)
    parser.add_argument("--convention", choices=[c.value for c in IndexConvention],
                        default=IndexConvention.TENSOR.value,
                        help="degree shift used when a linear form is factored out")
    parser.add_argument("--gorenstein", action="store_true",
                        help="also show the linked Gorenstein resolution")


def cmd_predict(app: App, args: argparse.Namespace) -> int:
    t = tuple_from_args(args)
    pred = predictor.predict(t, IndexConvention(args.convention))

    if args.json:
        app.emit(report.prediction_json(pred))
        return 0

    ui.print_banner(t)
    ui.print_prediction(pred)
    if args.gorenstein:
        if pred.gorenstein is None:
            ui.print_info(f"route {pred.route.value} does not go through a Gorenstein algebra")
        else:
            ui.print_table(pred.gorenstein.table(), pred.gorenstein.bounds,
                           "R/G (linked Gorenstein algebra)")
    return 0
