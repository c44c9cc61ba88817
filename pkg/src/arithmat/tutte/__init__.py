from __future__ import annotations

from arithmat.tutte.polynomials import BiPoly, UniPoly
from arithmat.tutte.specialize import (
    SequenceReport,
    Specialization,
    is_log_concave,
    is_unimodal,
    sequence_tests,
    specialize,
)
from arithmat.tutte.tutte import arithmetic_tutte_delcon, arithmetic_tutte_subsetsum, classical_tutte

__all__ = (
    "BiPoly",
    "SequenceReport",
    "Specialization",
    "UniPoly",
    "arithmetic_tutte_delcon",
    "arithmetic_tutte_subsetsum",
    "classical_tutte",
    "is_log_concave",
    "is_unimodal",
    "sequence_tests",
    "specialize",
)
