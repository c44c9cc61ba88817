from __future__ import annotations

from arithmat.linalg.matrix import IntMatrix
from arithmat.linalg.snf import SnfResult, gcd_maximal_minors, rank, same_lattice, saturate, snf

__all__ = (
    "IntMatrix",
    "SnfResult",
    "gcd_maximal_minors",
    "rank",
    "same_lattice",
    "saturate",
    "snf",
)
