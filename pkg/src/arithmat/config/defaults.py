"""
Global defaults for arithmat.

Created: 18/10/2026
"""

from __future__ import annotations

from pathlib import Path

# Default path for arithmat's config file
CONFIG_FILE: Path = Path.home().joinpath(".arithmat.toml").resolve()

# Name of the table arithmat reads from the config file
CONFIG_TABLE: str = "arithmat"

# Valid arithmat config keys
CONFIG_KEYS: set[str] = {
    "axiom_cap",
    "subset_cap",
    "format",
    "workers",
    "witness_limit",
}

# Defaults for arithmat config
AXIOM_CAP: int = 12
SUBSET_CAP: int = 20
FORMAT: str = "text"
WORKERS: int = 1
WITNESS_LIMIT: int = 16

# Config Schema
CONFIG_SCHEMA = """

# The .arithmat.toml config file

Everything lives under an `[arithmat]` table. Every key is optional, a missing
file or a missing key falls back to the default shown.

## axiom_cap *(int, default 12)*

Largest ground set `check-axioms` and `gale-dual` will enumerate exhaustively.
Checking axiom (3) walks every pair A ⊆ B so the work grows like 3^k to 4^k.

Explicit tables are checked regardless, you already paid for the 2^k entries.

## subset_cap *(int, default 20)*

Largest ground set for the subset-sum route to the arithmetic Tutte polynomial
(and the classical Tutte polynomial). The work grows like 2^k.

## format *(str, default "text")*

Report format written to stdout, either "text" or "json". The `--format` flag
on each command wins over this.

## workers *(int, default 1)*

Number of threads used for work that splits per basis: the matchings behind
`activity` and the point solving behind `points`.

## witness_limit *(int, default 16)*

How many witnesses `check-axioms` keeps per failing axiom. The number of
violations is always counted exactly.
"""
