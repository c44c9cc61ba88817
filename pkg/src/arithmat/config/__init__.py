from __future__ import annotations

from arithmat.config import defaults
from arithmat.config.config import Config

__all__ = (
    "Config",
    "defaults",
)
