"""
Module responsible for handling arithmat's programmatic
interaction with its config file.

Created: 18/10/2026
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any, Literal

import rtoml
from pydantic import BaseModel, Field

from arithmat.config import defaults

if TYPE_CHECKING:
    from pathlib import Path


class Config(BaseModel):
    axiom_cap: int = Field(default=defaults.AXIOM_CAP, ge=0)
    subset_cap: int = Field(default=defaults.SUBSET_CAP, ge=0)
    format: Literal["text", "json"] = defaults.FORMAT  # type: ignore[assignment]
    workers: int = Field(default=defaults.WORKERS, ge=1)
    witness_limit: int = Field(default=defaults.WITNESS_LIMIT, ge=1)

    @staticmethod
    def load(path: Path = defaults.CONFIG_FILE) -> Config:
        """
        Reads in the ~/.arithmat.toml config file and returns
        a populated `Config` object.

        Args:
            path (Path, optional): Path to the config file.
                Defaults to defaults.CONFIG_FILE.

        Returns:
            Config: Populated `Config` object.

        Raises:
            FileNotFoundError: If config file not found.
            pydantic.ValidationError: If a value is out of range.
        """
        config_dict: dict[str, Any] = rtoml.loads(path.read_text(encoding="utf-8")).get(defaults.CONFIG_TABLE, {})
        return Config(**config_dict)

    @staticmethod
    def load_or_default(path: Path = defaults.CONFIG_FILE) -> Config:
        """
        Like `load` but a missing file just means all the defaults.
        """
        try:
            return Config.load(path)
        except FileNotFoundError:
            return Config()

    def to_dict(self) -> dict[str, Any]:
        """
        Writes out the attributes from the calling instance
        to a dictionary.
        """
        return {
            "axiom_cap": self.axiom_cap,
            "subset_cap": self.subset_cap,
            "format": self.format,
            "workers": self.workers,
            "witness_limit": self.witness_limit,
        }

    def write(self, path: Path = defaults.CONFIG_FILE) -> None:
        """
        Overwrites the config file at `path` with the attributes from
        the calling instance.

        Args:
            path (Path, optional): Config file to overwrite.
                Defaults to defaults.CONFIG_FILE.
        """
        path.write_text(rtoml.dumps({defaults.CONFIG_TABLE: self.to_dict()}, pretty=True), encoding="utf-8")

    def override(self, **values: Any) -> Config:
        """
        Return a copy with any non-None keyword values applied,
        used to let command line flags win over the file.
        """
        updates = {key: value for key, value in values.items() if value is not None}
        if not updates:
            return self
        return Config(**{**self.to_dict(), **updates})
