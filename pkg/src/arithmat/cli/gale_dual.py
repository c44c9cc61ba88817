"""
The arithmat gale-dual command.

Created: 18/10/2026
"""

from __future__ import annotations

from typing import IO, TYPE_CHECKING

import click

from arithmat.cli.printer import printer
from arithmat.cli.utils import (
    axiom_cap_option,
    emit,
    format_option,
    handle_errors,
    input_argument,
    read_input,
    require_representation,
)
from arithmat.representation import gale_dual as gale_dual_of
from arithmat.representation import verify_dual_iso
from arithmat.schema import GaleDualReport

if TYPE_CHECKING:
    from arithmat.config import Config


@click.command(name="gale-dual")
@format_option
@axiom_cap_option
@input_argument
@click.pass_obj
def gale_dual(config: Config, fmt: str | None, axiom_cap: int | None, input_file: IO[bytes]) -> None:
    """
    Build a representation of the dual matroid.

    The dual lives in the quotient of Z^(k+s) by the rows of [X | Q].
    When the ground set is within the axiom cap its oracles are checked
    against the abstract dual on every sublist, a difference exits
    with code 2.

    Examples:
    $ arithmat gale-dual example.json
    """
    config = config.override(format=fmt, axiom_cap=axiom_cap)
    with handle_errors():
        r = require_representation(read_input(input_file), "gale-dual").to_representation()
        dual = gale_dual_of(r)
        if r.size <= config.axiom_cap:
            check = verify_dual_iso(r, cap=config.axiom_cap)
        else:
            printer.warn(f"ground size {r.size} is over the axiom cap, the dual was not verified")
            check = None
        report = GaleDualReport.build(dual, check, r.ground)

    emit(report, config.format)
