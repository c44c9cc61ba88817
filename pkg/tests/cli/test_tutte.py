from __future__ import annotations

import json
from typing import TYPE_CHECKING

import pytest

from tests.helpers import fixture_path

if TYPE_CHECKING:
    from tests.cli.conftest import Invoke


@pytest.mark.parametrize(
    ("name", "expected"),
    [
        ("triangle", "4 + 3*y + x + x^2"),
        ("torsion", "4 + 6*y + 2*y^2 + 2*x + 3*x*y + x*y^2 + 2*x^2 + 3*x^2*y + x^2*y^2"),
        ("breaks_axiom_3", "-1 + y + x + x*y"),
    ],
)
def test_tutte(invoke: Invoke, name: str, expected: str) -> None:
    result = invoke("tutte", str(fixture_path(name)))

    assert result.exit_code == 0
    assert result.stdout == f"{expected}\n"


@pytest.mark.parametrize("method", ["subset", "delcon", "both"])
def test_tutte_methods_agree(invoke: Invoke, method: str) -> None:
    result = invoke("tutte", "--method", method, str(fixture_path("torsion")))

    assert result.exit_code == 0
    assert result.stdout.startswith("4 + 6*y + 2*y^2")


def test_tutte_reads_stdin(invoke: Invoke) -> None:
    result = invoke("tutte", input=fixture_path("triangle").read_bytes())

    assert result.exit_code == 0
    assert result.stdout == "4 + 3*y + x + x^2\n"


def test_tutte_json(invoke: Invoke) -> None:
    result = invoke("tutte", "--format", "json", "--method", "both", str(fixture_path("triangle")))
    report = json.loads(result.stdout)

    assert result.exit_code == 0
    assert report["command"] == "tutte"
    assert report["polynomial"]["text"] == "4 + 3*y + x + x^2"
    assert report["subset"] == report["delcon"]


def test_tutte_output_is_deterministic(invoke: Invoke) -> None:
    first = invoke("tutte", "--format", "json", str(fixture_path("unsaturated")))
    second = invoke("tutte", "--format", "json", str(fixture_path("unsaturated")))

    assert first.exit_code == 0
    assert first.stdout == second.stdout


def test_malformed_json(invoke: Invoke) -> None:
    result = invoke("tutte", input='{"kind": "explicit",')

    assert result.exit_code == 1
    assert result.stdout == ""
    assert "malformed JSON" in result.stderr


def test_invalid_description(invoke: Invoke) -> None:
    document = {"kind": "explicit", "size": 1, "rank": {"0": 0}, "multiplicity": {"0": 1, "1": 1}}
    result = invoke("tutte", input=json.dumps(document))

    assert result.exit_code == 1
    assert "invalid matroid description" in result.stderr
    assert "missing 1 key(s)" in result.stderr


def test_invalid_group(invoke: Invoke) -> None:
    document = {"kind": "representation", "group": {"free_rank": 0, "torsion": [4, 6]}, "elements": []}
    result = invoke("tutte", input=json.dumps(document))

    assert result.exit_code == 1
    assert "divisibility chain" in result.stderr


def test_subset_cap(invoke: Invoke) -> None:
    result = invoke("tutte", "--subset-cap", "2", str(fixture_path("triangle")))

    assert result.exit_code == 1
    assert "cap exceeded" in result.stderr


def test_delcon_ignores_the_subset_cap(invoke: Invoke) -> None:
    result = invoke("tutte", "--method", "delcon", "--subset-cap", "2", str(fixture_path("triangle")))

    assert result.exit_code == 0
    assert result.stdout == "4 + 3*y + x + x^2\n"


def test_bad_method_is_a_usage_error(invoke: Invoke) -> None:
    result = invoke("tutte", "--method", "guess", str(fixture_path("triangle")))

    assert result.exit_code == 2
    assert "Invalid value for '--method'" in result.stderr
