"""
Collection of useful helpers for the CLI: the options most commands
share, reading the input and writing the report.

Created: 18/10/2026
"""

from __future__ import annotations

import contextlib
from typing import TYPE_CHECKING

import click

from arithmat.cli.printer import printer
from arithmat.exceptions import ArithmatError, CapExceededError, InputError, MalformedInputError, SchemaError
from arithmat.schema import RepresentationInput, parse_input

if TYPE_CHECKING:
    from collections.abc import Iterator
    from typing import IO

    from arithmat.matroid import ArithmeticMatroid
    from arithmat.schema import ExplicitInput, Report

# Exit codes
INPUT_ERROR = 1
MISMATCH = 2

input_argument = click.argument("input_file", metavar="INPUT", type=click.File("rb"), default="-")

format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default=None,
    help="Report format, overrides the config file.",
)

axiom_cap_option = click.option(
    "--axiom-cap",
    type=click.IntRange(min=0),
    default=None,
    help="Largest ground set for exhaustive axiom checks, overrides the config file.",
)

subset_cap_option = click.option(
    "--subset-cap",
    type=click.IntRange(min=0),
    default=None,
    help="Largest ground set for subset sums, overrides the config file.",
)

workers_option = click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=None,
    help="Threads for per-basis work, overrides the config file.",
)


@contextlib.contextmanager
def handle_errors() -> Iterator[None]:
    """
    Turn library errors into a diagnostic on stderr and exit code 1,
    with a different message for each kind of bad input.
    """
    try:
        yield
    except MalformedInputError as err:
        printer.error(f"malformed JSON: {err.message}", exits=INPUT_ERROR)
    except SchemaError as err:
        printer.error(f"invalid matroid description: {err.message}", exits=INPUT_ERROR)
    except CapExceededError as err:
        printer.error(f"cap exceeded: {err.message}")
        printer.note("raise the cap with the command's cap option or in the config file", exits=INPUT_ERROR)
    except ArithmatError as err:
        printer.error(err.message, exits=INPUT_ERROR)


def read_input(input_file: IO[bytes]) -> RepresentationInput | ExplicitInput:
    """
    Parse the matroid description from an open file or stdin.
    """
    description = parse_input(input_file.read())
    printer.subtle(f"read a {description.kind} description")
    return description


def load_matroid(input_file: IO[bytes]) -> ArithmeticMatroid:
    m = read_input(input_file).to_matroid()
    printer.subtle(f"ground size {m.size}, rank {m.total_rank}, {m.backing.value} backing")
    return m


def require_representation(description: RepresentationInput | ExplicitInput, command: str) -> RepresentationInput:
    if not isinstance(description, RepresentationInput):
        raise InputError(f"{command} needs a representation, got an explicit table")
    return description


def emit(report: Report, fmt: str) -> None:
    """
    Write the report to stdout, then exit 2 if any verification in it failed.
    """
    click.echo(report.render(fmt))
    if report.mismatch:
        printer.error(f"{report.command} verification failed", exits=MISMATCH)
    if report.checked and printer.verbose:
        printer.good(f"{report.command} verification passed")
