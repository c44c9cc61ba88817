"""
The arithmat activity command.

Created: 18/10/2026
"""

from __future__ import annotations

from typing import IO, TYPE_CHECKING

import click

from arithmat.activity import ElementOrder, all_matchings, build_lists, summand
from arithmat.cli.printer import printer
from arithmat.cli.utils import (
    emit,
    format_option,
    handle_errors,
    input_argument,
    load_matroid,
    subset_cap_option,
    workers_option,
)
from arithmat.schema import ActivityReport
from arithmat.tutte import BiPoly, arithmetic_tutte_subsetsum

if TYPE_CHECKING:
    from arithmat.config import Config


@click.command()
@click.option("--order", default=None, help="Element order, smallest first, e.g. 'c,a,b'. Defaults to input order.")
@format_option
@subset_cap_option
@workers_option
@input_argument
@click.pass_obj
def activity(
    config: Config,
    order: str | None,
    fmt: str | None,
    subset_cap: int | None,
    workers: int | None,
    input_file: IO[bytes],
) -> None:
    """
    Rebuild M(x, y) from external activities.

    Prints the weighted lists L_X and L_X*, the matching for every basis
    with its summand, and their total, which is compared against the
    subset sum M(x, y). A difference exits with code 2.

    Examples:
    $ arithmat activity example.json

    $ arithmat activity --order d,c,b,a example.json
    """
    config = config.override(format=fmt, subset_cap=subset_cap, workers=workers)
    with handle_errors():
        m = load_matroid(input_file)
        element_order = ElementOrder.parse(order, m.ground) if order else ElementOrder.default(m.size)
        printer.subtle(f"order {element_order.render(m.ground)}, {config.workers} worker(s)")
        matchings = all_matchings(m, element_order, workers=config.workers)
        summands = [summand(matching) for matching in matchings]
        total = BiPoly()
        for part in summands:
            total = total + part
        report = ActivityReport.build(
            m.ground,
            list(element_order.sequence),
            build_lists(m),
            list(zip(matchings, summands)),
            mbar=total,
            tutte=arithmetic_tutte_subsetsum(m, cap=config.subset_cap),
        )

    emit(report, config.format)
