"""Logging setup: one RichHandler on stderr for the ``aci_betti`` logger tree."""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

LEVELS = {0: logging.WARNING, 1: logging.INFO}


def setup_logging(verbosity: int = 0) -> logging.Logger:
    level = LEVELS.get(verbosity, logging.DEBUG)
    handler = RichHandler(console=Console(stderr=True), show_path=False,
                          show_time=verbosity > 1, markup=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger = logging.getLogger("aci_betti")
    logger.handlers = [handler]
    logger.setLevel(level)
    logger.propagate = False
    return logger
