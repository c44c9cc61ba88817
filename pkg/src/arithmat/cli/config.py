"""
The arithmat config command group.

Created: 18/10/2026
"""

from __future__ import annotations

import click
from rich import box
from rich.console import Console
from rich.markdown import Markdown
from rich.table import Table

from arithmat.cli.printer import printer
from arithmat.config import Config, defaults


@click.group()
def config() -> None:
    """
    Interact with arithmat's configuration.

    The config command group allows you to get, show and explain arithmat's configuration.
    """


@config.command()
@click.pass_obj
def show(config: Config) -> None:
    """
    Show arithmat's config.

    The values are taken directly from the config file where specified or
    the defaults otherwise.

    Examples:
    $ arithmat config show
    """
    table = Table(box=box.SIMPLE)
    table.add_column("Key", style="cyan", justify="right")
    table.add_column("Value", justify="left")

    for key, val in config.to_dict().items():
        table.add_row(f"{key}:", str(val))

    console = Console()
    console.print(table)


@config.command()
@click.argument("key", nargs=1)
@click.pass_obj
def get(config: Config, key: str) -> None:
    """
    Get the currently set value for a config key.

    Examples:
    $ arithmat config get axiom_cap
    """
    if key not in defaults.CONFIG_KEYS:
        printer.error(f"{key} is not a valid arithmat config key.")
        printer.note(f"Valid keys are {', '.join(sorted(defaults.CONFIG_KEYS))}.", exits=1)

    click.echo(f"{key}: {config.to_dict().get(key)}")


@config.command()
def explain() -> None:
    """
    Print a list and description of arithmat config values.

    Examples:
    $ arithmat config explain
    """
    console = Console()
    markdown = Markdown(defaults.CONFIG_SCHEMA)
    console.print(markdown)
