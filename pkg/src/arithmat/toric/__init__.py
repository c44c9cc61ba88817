from __future__ import annotations

from arithmat.toric.points import (
    AesReport,
    ComponentReport,
    CountDiscrepancy,
    PointRecord,
    TorusPoint,
    enumerate_points,
    local_tutte,
    points_per_basis,
    verify_aes,
    verify_component_counts,
)

__all__ = (
    "AesReport",
    "ComponentReport",
    "CountDiscrepancy",
    "PointRecord",
    "TorusPoint",
    "enumerate_points",
    "local_tutte",
    "points_per_basis",
    "verify_aes",
    "verify_component_counts",
)
