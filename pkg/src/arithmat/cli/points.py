"""
The arithmat points command.

Created: 18/10/2026
"""

from __future__ import annotations

from typing import IO, TYPE_CHECKING

import click

from arithmat.cli.utils import (
    emit,
    format_option,
    handle_errors,
    input_argument,
    read_input,
    require_representation,
    workers_option,
)
from arithmat.schema import PointsReport
from arithmat.toric import enumerate_points, verify_aes, verify_component_counts

if TYPE_CHECKING:
    from arithmat.config import Config


@click.command()
@format_option
@workers_option
@input_argument
@click.pass_obj
def points(config: Config, fmt: str | None, workers: int | None, input_file: IO[bytes]) -> None:
    """
    List the points of the toric arrangement, where some basis vanishes.

    Each point is written in Q/Z coordinates with the elements vanishing
    there. The point counts are checked against the multiplicities and
    M(1, y) against the sum of the local Tutte polynomials T(1, y).
    Either check failing exits with code 2.

    Examples:
    $ arithmat points example.json
    """
    config = config.override(format=fmt, workers=workers)
    with handle_errors():
        r = require_representation(read_input(input_file), "points").to_representation()
        records = enumerate_points(r, workers=config.workers)
        report = PointsReport.build(
            records,
            verify_component_counts(r, records),
            verify_aes(r, records),
            r.ground,
        )

    emit(report, config.format)
