"""Command registry: subcommand names and aliases mapped to handlers and their options.

Each Command is stored once; every name it answers to (canonical name and
aliases) points at the same object in one lookup table. The registry also
builds the argparse subparsers, so a command's options live next to its handler.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Callable

if TYPE_CHECKING:
    from aci_betti.app import App

CommandHandler = Callable[["App", argparse.Namespace], int]
Configure = Callable[[argparse.ArgumentParser], None]


def _no_options(parser: argparse.ArgumentParser) -> None:
    pass


@dataclass(frozen=True)
class Command:
    name: str
    handler: CommandHandler
    aliases: tuple[str, ...] = ()
    description: str = ""
    configure: Configure = field(default=_no_options, repr=False)

    @property
    def names(self) -> tuple[str, ...]:
        return (self.name, *self.aliases)


class CommandRegistry:
    def __init__(self) -> None:
        self._lookup: dict[str, Command] = {}
        self._order: list[Command] = []

    def register(
        self,
        name: str,
        handler: CommandHandler,
        aliases: list[str] | None = None,
        description: str = "",
        configure: Configure | None = None,
    ) -> Command:
        cmd = Command(name=name, handler=handler, aliases=tuple(aliases or ()),
                      description=description, configure=configure or _no_options)
        taken = [n for n in cmd.names if n in self._lookup]
        if taken:
            raise ValueError(f"command name already registered: {', '.join(taken)}")
        for n in cmd.names:
            self._lookup[n] = cmd
        self._order.append(cmd)
        return cmd

    def get(self, name: str) -> Command | None:
        return self._lookup.get(name)

    def add_subparsers(self, parser: argparse.ArgumentParser) -> None:
        """One subparser per command; ``args.command`` holds the name as typed, resolve it with get()."""
        sub = parser.add_subparsers(dest="command", metavar="COMMAND")
        sub.required = True
        for cmd in self._order:
            child = sub.add_parser(cmd.name, aliases=list(cmd.aliases), help=cmd.description,
                                   description=cmd.description)
            cmd.configure(child)

    @property
    def command_names(self) -> list[str]:
        return sorted(self._lookup)

    @property
    def commands(self) -> list[Command]:
        return list(self._order)
