"""
The arithmat specialize command.

Created: 18/10/2026
"""

from __future__ import annotations

from typing import IO, TYPE_CHECKING

import click

from arithmat.cli.utils import emit, format_option, handle_errors, input_argument, load_matroid, subset_cap_option
from arithmat.schema import SpecializeReport
from arithmat.tutte import Specialization, arithmetic_tutte_subsetsum
from arithmat.tutte import specialize as specialize_at

if TYPE_CHECKING:
    from arithmat.config import Config

AT_CHOICES = [s.value for s in Specialization]


@click.command()
@click.option("--at", "at", type=click.Choice(AT_CHOICES), required=True, help="Which evaluation of M(x, y).")
@format_option
@subset_cap_option
@input_argument
@click.pass_obj
def specialize(config: Config, at: str, fmt: str | None, subset_cap: int | None, input_file: IO[bytes]) -> None:
    """
    Evaluate M(x, y) at one of its counting specializations.

    \b
    bases           M(1, 1), the sum of m(B) over bases
    components      M(1, 0)
    poincare        the Poincare polynomial of the complement
    characteristic  (-1)^n M(1 - q, 0)
    indep           M(1 + q, 1)

    Examples:
    $ arithmat specialize --at characteristic example.json
    """
    config = config.override(format=fmt, subset_cap=subset_cap)
    with handle_errors():
        m = load_matroid(input_file)
        p = arithmetic_tutte_subsetsum(m, cap=config.subset_cap)
        report = SpecializeReport.build(at, specialize_at(p, Specialization(at), m.total_rank))

    emit(report, config.format)
