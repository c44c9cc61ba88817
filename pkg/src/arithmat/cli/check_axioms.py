"""
The arithmat check-axioms command.

Created: 18/10/2026
"""

from __future__ import annotations

from typing import IO, TYPE_CHECKING

import click

from arithmat.cli.utils import axiom_cap_option, emit, format_option, handle_errors, input_argument, load_matroid
from arithmat.matroid import check_axioms as check
from arithmat.schema import AxiomsReport

if TYPE_CHECKING:
    from arithmat.config import Config


@click.command(name="check-axioms")
@format_option
@axiom_cap_option
@input_argument
@click.pass_obj
def check_axioms(config: Config, fmt: str | None, axiom_cap: int | None, input_file: IO[bytes]) -> None:
    """
    Check the rank axioms and multiplicity axioms (1) to (5).

    Every failing axiom is reported with its number of violations and
    up to `witness_limit` witnesses. Any failure exits with code 2.

    Explicit tables are always checked, anything else only up to the
    axiom cap.

    Examples:
    $ arithmat check-axioms --axiom-cap 14 example.json
    """
    config = config.override(format=fmt, axiom_cap=axiom_cap)
    with handle_errors():
        m = load_matroid(input_file)
        report = AxiomsReport.build(check(m, cap=config.axiom_cap, witness_limit=config.witness_limit), m.ground)

    emit(report, config.format)
