from __future__ import annotations

from arithmat.schema.inputs import ExplicitInput, GroupSpec, MatroidInput, RepresentationInput, parse_input
from arithmat.schema.reports import (
    ActivityReport,
    AxiomsReport,
    DualReport,
    GaleDualReport,
    PointsReport,
    PolyModel,
    PropertyModel,
    PropsReport,
    Report,
    SpecializeReport,
    TutteReport,
    UniPolyModel,
)

__all__ = (
    "ActivityReport",
    "AxiomsReport",
    "DualReport",
    "ExplicitInput",
    "GaleDualReport",
    "GroupSpec",
    "MatroidInput",
    "PointsReport",
    "PolyModel",
    "PropertyModel",
    "PropsReport",
    "Report",
    "RepresentationInput",
    "SpecializeReport",
    "TutteReport",
    "UniPolyModel",
    "parse_input",
)
