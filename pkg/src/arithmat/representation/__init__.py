from __future__ import annotations

from arithmat.representation.properties import is_gcd, is_torsion_free, maximal_independent
from arithmat.representation.representation import (
    Discrepancy,
    DualIsoReport,
    Representation,
    from_representation,
    gale_dual,
    verify_dual_iso,
)

__all__ = (
    "Discrepancy",
    "DualIsoReport",
    "Representation",
    "from_representation",
    "gale_dual",
    "is_gcd",
    "is_torsion_free",
    "maximal_independent",
    "verify_dual_iso",
)
