"""config command: show or change the stored oracle and scan defaults."""

from __future__ import annotations

import argparse
from typing import TYPE_CHECKING

from rich.table import Table

from aci_betti import config, ui

if TYPE_CHECKING:
    from aci_betti.app import App


def configure(parser: argparse.ArgumentParser) -> None:
    sub = parser.add_subparsers(dest="action", metavar="ACTION")
    sub.add_parser("show", help="print every setting and where it comes from")
    setter = sub.add_parser("set", help="store a setting, e.g. oracle.prime 101")
    setter.add_argument("key", help="section.key")
    setter.add_argument("value")


def cmd_config(app: App, args: argparse.Namespace) -> int:
    if getattr(args, "action", None) == "set":
        value = config.set_setting(args.key, args.value)
        ui.print_success(f"{args.key} = {value} (saved to {config.CONFIG_FILE})")
        return 0

    stored = config.load_config()
    grid = Table(show_header=True, header_style="bold", border_style="dim", padding=(0, 1))
    grid.add_column("Setting", style="header", no_wrap=True)
    grid.add_column("Value")
    grid.add_column("Source", style="muted")
    for section, defaults in config.DEFAULTS.items():
        for key, default in defaults.items():
            if key in stored.get(section, {}):
                grid.add_row(f"{section}.{key}", str(stored[section][key]), "config file")
            else:
                grid.add_row(f"{section}.{key}", str(default) or "-", "default")
    ui.console.print()
    ui.console.print(grid)
    ui.print_info(f"{config.SEED_ENV} overrides oracle.seed; command-line flags override both")
    return 0
