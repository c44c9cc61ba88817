"""
The root CLI command.

Created: 18/10/2026
"""

from __future__ import annotations

from pathlib import Path

import click
import rich.traceback

from arithmat import __version__
from arithmat.cli.activity import activity
from arithmat.cli.check_axioms import check_axioms
from arithmat.cli.config import config
from arithmat.cli.dual import dual
from arithmat.cli.gale_dual import gale_dual
from arithmat.cli.points import points
from arithmat.cli.printer import printer
from arithmat.cli.props import props
from arithmat.cli.specialize import specialize
from arithmat.cli.tutte import tutte
from arithmat.config import Config, defaults

# So that if we do ever get a traceback, it uses rich to show it nicely
rich.traceback.install()


@click.group(
    commands={
        "tutte": tutte,
        "dual": dual,
        "gale-dual": gale_dual,
        "check-axioms": check_axioms,
        "activity": activity,
        "points": points,
        "specialize": specialize,
        "props": props,
        "config": config,
    }
)
@click.version_option(version=__version__, prog_name="arithmat")
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help=f"Config file to use. Defaults to {defaults.CONFIG_FILE}.",
)
@click.option("--verbose", "-v", is_flag=True, default=False, help="Print progress notes on stderr.")
@click.pass_context
def main(ctx: click.Context, config_path: Path | None, verbose: bool) -> None:
    """
    Compute with arithmetic matroids, exactly.

    - Arithmetic Tutte polynomials by subset sum or deletion-contraction.

    - Duals, both abstract and as representations.

    - The multiplicity axioms, with witnesses when they fail.

    - Activity expansions and the points of toric arrangements.

    Every command reads a JSON matroid description from a file or stdin.
    """
    printer.verbose = verbose
    path = config_path or defaults.CONFIG_FILE
    if config_path is not None and not config_path.exists():
        printer.error(f"config file {config_path} does not exist", exits=1)

    # Load the config once on launch of the app and pass it down to the child commands
    # through click's context
    try:
        ctx.obj = Config.load_or_default(path)
    except ValueError as err:
        printer.error(f"invalid config file {path}: {err}", exits=1)
    printer.subtle(f"config: {ctx.obj.to_dict()}")
