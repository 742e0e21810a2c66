"""hilbert command: Hilbert functions of R/J, R/I and the linked R/G."""

from __future__ import annotations

import argparse
from typing import TYPE_CHECKING

from aci_betti import hilbert, report, ui
from aci_betti.models import Classification, GorensteinProfile, HilbertFunction
from aci_betti.parser import add_json_option, add_tuple_options, tuple_from_args

if TYPE_CHECKING:
    from aci_betti.app import App


def configure(parser: argparse.ArgumentParser) -> None:
    add_tuple_options(parser)
    add_json_option(parser)


def cmd_hilbert(app: App, args: argparse.Namespace) -> int:
    t = tuple_from_args(args)
    functions: dict[str, HilbertFunction] = {
        "R/J": hilbert.ci_hilbert(t.regular, t.n),
        "R/I": hilbert.aci_hilbert(t),
    }
    profile: GorensteinProfile | None = None
    if t.classification is Classification.PROPER_ACI:
        functions["R/G"] = hilbert.linked_gorenstein_hilbert(t)
        profile = hilbert.gorenstein_profile(t)

    if args.json:
        app.emit(report.hilbert_json(t, functions, profile))
        return 0

    ui.print_hilbert(t, functions, profile)
    if t.classification is Classification.COMPLETE_INTERSECTION:
        ui.print_info(f"the form of degree {t.last} lies in the ideal of the others: "
                      "R/I is a complete intersection")
    elif t.classification is Classification.DEGENERATE:
        ui.print_info("a linear form is among the generators; no linked Gorenstein algebra")
    return 0
