"""
The arithmat props command.

Created: 18/10/2026
"""

from __future__ import annotations

from typing import IO, TYPE_CHECKING

import click

from arithmat.cli.utils import emit, format_option, handle_errors, input_argument, load_matroid, subset_cap_option
from arithmat.exceptions import SpecializationError
from arithmat.representation import is_gcd, is_torsion_free
from arithmat.schema import PropertyModel, PropsReport
from arithmat.tutte import Specialization, UniPoly, arithmetic_tutte_subsetsum, sequence_tests, specialize

if TYPE_CHECKING:
    from arithmat.config import Config

CHECKS = ("gcd", "torsion-free", "unimodal", "log-concave")


@click.command()
@click.option(
    "--check",
    "checks",
    type=click.Choice(CHECKS),
    multiple=True,
    help="Property to test, may be repeated. Defaults to all of them.",
)
@click.option(
    "--at",
    "at",
    type=click.Choice(["poincare", "characteristic", "indep"]),
    default="characteristic",
    show_default=True,
    help="Polynomial whose coefficients the sequence checks look at.",
)
@format_option
@subset_cap_option
@input_argument
@click.pass_obj
def props(
    config: Config,
    checks: tuple[str, ...],
    at: str,
    fmt: str | None,
    subset_cap: int | None,
    input_file: IO[bytes],
) -> None:
    """
    Test structural properties of an arithmetic matroid.

    gcd and torsion-free are necessary conditions for representability.
    unimodal and log-concave look at the absolute values of the
    coefficients of a specialization of M(x, y).

    A property that fails is not an error, the exit code is 0.

    Examples:
    $ arithmat props --check unimodal --at indep example.json
    """
    config = config.override(format=fmt, subset_cap=subset_cap)
    wanted = [c for c in CHECKS if c in checks] if checks else list(CHECKS)
    with handle_errors():
        m = load_matroid(input_file)
        results = []
        if "gcd" in wanted:
            results.append(PropertyModel(name="gcd", holds=is_gcd(m)))
        if "torsion-free" in wanted:
            results.append(PropertyModel(name="torsion-free", holds=is_torsion_free(m)))
        if "unimodal" in wanted or "log-concave" in wanted:
            poly = specialize(arithmetic_tutte_subsetsum(m, cap=config.subset_cap), Specialization(at), m.total_rank)
            if not isinstance(poly, UniPoly):
                raise SpecializationError(f"{at} is not a polynomial")
            sequence = sequence_tests(poly)
            detail = f"{at}: {poly.to_text()}"
            if "unimodal" in wanted:
                results.append(PropertyModel(name="unimodal", holds=sequence.unimodal, detail=detail))
            if "log-concave" in wanted:
                results.append(PropertyModel(name="log-concave", holds=sequence.log_concave, detail=detail))
        report = PropsReport(properties=results)

    emit(report, config.format)
