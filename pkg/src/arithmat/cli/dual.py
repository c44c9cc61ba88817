"""
The arithmat dual command.

Created: 18/10/2026
"""

from __future__ import annotations

from typing import IO, TYPE_CHECKING

import click

from arithmat.cli.utils import emit, format_option, handle_errors, input_argument, load_matroid
from arithmat.matroid import dual as dual_of
from arithmat.schema import DualReport, ExplicitInput

if TYPE_CHECKING:
    from arithmat.config import Config


@click.command()
@format_option
@input_argument
@click.pass_obj
def dual(config: Config, fmt: str | None, input_file: IO[bytes]) -> None:
    """
    Write out the dual arithmetic matroid as explicit tables.

    rk*(A) = |A| + rk(X - A) - rk(X) and m*(A) = m(X - A). The `matroid`
    field of the JSON report is itself a valid explicit description.

    Examples:
    $ arithmat dual --format json example.json
    """
    config = config.override(format=fmt)
    with handle_errors():
        m = load_matroid(input_file)
        report = DualReport(matroid=ExplicitInput.from_matroid(dual_of(m)))

    emit(report, config.format)
