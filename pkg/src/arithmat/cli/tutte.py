"""
The arithmat tutte command.

Created: 18/10/2026
"""

from __future__ import annotations

from typing import IO, TYPE_CHECKING

import click

from arithmat.cli.printer import printer
from arithmat.cli.utils import emit, format_option, handle_errors, input_argument, load_matroid, subset_cap_option
from arithmat.schema import PolyModel, TutteReport
from arithmat.tutte import arithmetic_tutte_delcon, arithmetic_tutte_subsetsum

if TYPE_CHECKING:
    from arithmat.config import Config


@click.command()
@click.option(
    "--method",
    type=click.Choice(["subset", "delcon", "both"]),
    default="subset",
    show_default=True,
    help="Subset sum, deletion-contraction or both (which must agree).",
)
@format_option
@subset_cap_option
@input_argument
@click.pass_obj
def tutte(config: Config, method: str, fmt: str | None, subset_cap: int | None, input_file: IO[bytes]) -> None:
    """
    Compute the arithmetic Tutte polynomial M(x, y).

    INPUT is a JSON matroid description, stdin if omitted.

    With `--method both` the two routes are compared and a difference
    exits with code 2.

    Examples:
    $ arithmat tutte example.json

    $ arithmat tutte --method both --format json example.json
    """
    config = config.override(format=fmt, subset_cap=subset_cap)
    with handle_errors():
        m = load_matroid(input_file)
        if method == "delcon":
            report = TutteReport(method="delcon", polynomial=PolyModel.from_poly(arithmetic_tutte_delcon(m)))
        else:
            subset = PolyModel.from_poly(arithmetic_tutte_subsetsum(m, cap=config.subset_cap))
            if method == "subset":
                report = TutteReport(method="subset", polynomial=subset)
            else:
                printer.subtle("cross-checking with deletion-contraction")
                delcon = PolyModel.from_poly(arithmetic_tutte_delcon(m))
                report = TutteReport(method="both", polynomial=subset, subset=subset, delcon=delcon)

    emit(report, config.format)
