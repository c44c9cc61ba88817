from __future__ import annotations

from typing import TYPE_CHECKING, Protocol

import pytest
from click.testing import CliRunner, Result

from arithmat.cli.root import main

if TYPE_CHECKING:
    from pathlib import Path


class Invoke(Protocol):
    def __call__(self, *args: str, input: str | bytes | None = None) -> Result: ...  # noqa: A002


@pytest.fixture
def config_file(tmp_path: Path) -> Path:
    """
    An empty config file so the user's own ~/.arithmat.toml never leaks in.
    """
    file = tmp_path / ".arithmat.toml"
    file.write_text("[arithmat]\n", encoding="utf-8")
    return file


@pytest.fixture
def invoke(config_file: Path) -> Invoke:
    runner = CliRunner(mix_stderr=False)

    def run(*args: str, input: str | bytes | None = None) -> Result:  # noqa: A002
        return runner.invoke(main, ["--config", str(config_file), *args], input=input)

    return run
