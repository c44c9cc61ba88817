from __future__ import annotations

from typing import TYPE_CHECKING

from click.testing import CliRunner

from arithmat import __version__
from arithmat.cli.root import main
from arithmat.config import defaults
from tests.helpers import fixture_path

if TYPE_CHECKING:
    from pathlib import Path

    from pytest_mock import MockerFixture

    from tests.cli.conftest import Invoke


def test_cli_doesnt_blow_up() -> None:
    runner = CliRunner()
    result = runner.invoke(main, ["--help"])

    assert result.exit_code == 0
    assert "Compute with arithmetic matroids, exactly." in result.stdout


def test_every_command_is_registered() -> None:
    runner = CliRunner()
    result = runner.invoke(main, ["--help"])

    for command in ("tutte", "dual", "gale-dual", "check-axioms", "activity", "points", "specialize", "props"):
        assert command in result.stdout


def test_version() -> None:
    runner = CliRunner()
    result = runner.invoke(main, ["--version"])

    assert result.exit_code == 0
    assert __version__ in result.stdout


def test_missing_config_file(tmp_path: Path) -> None:
    runner = CliRunner(mix_stderr=False)
    result = runner.invoke(main, ["--config", str(tmp_path / "nope.toml"), "config", "show"])

    assert result.exit_code == 1
    assert "does not exist" in result.stderr


def test_invalid_config_file(tmp_path: Path) -> None:
    file = tmp_path / ".arithmat.toml"
    file.write_text("[arithmat]\nworkers = 0\n", encoding="utf-8")
    runner = CliRunner(mix_stderr=False)
    result = runner.invoke(main, ["--config", str(file), "config", "show"])

    assert result.exit_code == 1
    assert "invalid config file" in result.stderr


def test_config_values_reach_the_commands(tmp_path: Path) -> None:
    file = tmp_path / ".arithmat.toml"
    file.write_text('[arithmat]\nformat = "json"\n', encoding="utf-8")
    runner = CliRunner(mix_stderr=False)
    result = runner.invoke(main, ["--config", str(file), "specialize", "--at", "bases", str(fixture_path("triangle"))])

    assert result.exit_code == 0
    assert '"integer": 9' in result.stdout


def test_verbose_notes_go_to_stderr(invoke: Invoke) -> None:
    result = invoke("--verbose", "tutte", str(fixture_path("triangle")))

    assert result.exit_code == 0
    assert result.stdout == "4 + 3*y + x + x^2\n"
    assert "read a representation description" in result.stderr


def test_quiet_by_default(invoke: Invoke) -> None:
    result = invoke("tutte", str(fixture_path("triangle")))

    assert result.exit_code == 0
    assert result.stderr == ""


def test_default_config_file_is_used(mocker: MockerFixture, tmp_path: Path) -> None:
    file = tmp_path / ".arithmat.toml"
    file.write_text("[arithmat]\nwitness_limit = 3\n", encoding="utf-8")
    mocker.patch.object(defaults, "CONFIG_FILE", file)

    runner = CliRunner(mix_stderr=False)
    result = runner.invoke(main, ["config", "get", "witness_limit"])

    assert result.exit_code == 0
    assert result.stdout == "witness_limit: 3\n"
