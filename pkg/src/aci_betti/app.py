"""Main application: argparse front end, command dispatch and exit codes."""

from __future__ import annotations

import argparse
import logging
import sys
from contextlib import AbstractContextManager
from typing import Any, Sequence

from aci_betti import __version__, report, ui
from aci_betti.commands.compare import cmd_compare
from aci_betti.commands.compare import configure as configure_compare
from aci_betti.commands.hilbert import cmd_hilbert
from aci_betti.commands.hilbert import configure as configure_hilbert
from aci_betti.commands.predict import cmd_predict
from aci_betti.commands.predict import configure as configure_predict
from aci_betti.commands.registry import CommandRegistry
from aci_betti.commands.repro import cmd_repro
from aci_betti.commands.repro import configure as configure_repro
from aci_betti.commands.scan import cmd_scan
from aci_betti.commands.scan import configure as configure_scan
from aci_betti.commands.settings import cmd_config
from aci_betti.commands.settings import configure as configure_config
from aci_betti.errors import BettiError, InvalidInput
from aci_betti.log import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DIFF = 1
EXIT_INPUT = 2
EXIT_FAILURE = 3


class App:
    def __init__(self) -> None:
        self.registry = CommandRegistry()
        self._register_commands()
        self.parser = self._build_parser()

    def _register_commands(self) -> None:
        r = self.registry
        r.register("hilbert", cmd_hilbert, aliases=["h"], configure=configure_hilbert,
                   description="Hilbert functions of R/J, R/I and the linked R/G")
        r.register("predict", cmd_predict, aliases=["p"], configure=configure_predict,
                   description="Predicted graded Betti table of R/I")
        r.register("compare", cmd_compare, aliases=["c", "verify"], configure=configure_compare,
                   description="Prediction against the GF(p) oracle")
        r.register("scan", cmd_scan, configure=configure_scan,
                   description="Ghosts and shared twists over a box of degree tuples")
        r.register("repro", cmd_repro, configure=configure_repro,
                   description="Replay the worked reference tables")
        r.register("config", cmd_config, configure=configure_config,
                   description="Show or change stored defaults")

    def _build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="aci-betti",
            description="Graded Betti tables of n+1 general forms in n variables.",
        )
        parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
        parser.add_argument("-v", "--verbose", action="count", default=0,
                            help="-v for progress, -vv for linear-algebra detail")
        self.registry.add_subparsers(parser)
        return parser

    def emit(self, doc: Any, indent: int | None = 2) -> None:
        """JSON goes to stdout untouched by rich markup."""
        sys.stdout.write(report.dumps(doc, indent=indent) + "\n")
        sys.stdout.flush()

    def status(self, message: str) -> AbstractContextManager:
        return ui.err_console.status(f"[info]{message}...[/info]", spinner="dots")

    def run(self, argv: Sequence[str] | None = None) -> int:
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as exc:
            # argparse exits 2 on usage errors and 0 for --help/--version
            return exc.code if isinstance(exc.code, int) else EXIT_INPUT
        setup_logging(args.verbose)

        command = self.registry.get(args.command)
        if command is None:
            ui.print_error(f"Unknown command: {args.command}")
            return EXIT_INPUT
        try:
            return command.handler(self, args)
        except InvalidInput as e:
            ui.print_error(str(e))
            return EXIT_INPUT
        except BettiError as e:
            logger.debug("command %s failed", command.name, exc_info=True)
            ui.print_error(f"{type(e).__name__}: {e}")
            return EXIT_FAILURE


def main(argv: Sequence[str] | None = None) -> None:
    try:
        code = App().run(argv)
    except KeyboardInterrupt:
        ui.console.print()
        ui.print_info("Interrupted.")
        code = 130
    sys.exit(code)
