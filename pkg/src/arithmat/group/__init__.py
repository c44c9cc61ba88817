from __future__ import annotations

from arithmat.group.group import ElementMap, FgGroup, GroupElement
from arithmat.group.lattice import (
    SubgroupData,
    lifted_matrix,
    quotient_presentation,
    saturate_ambient,
    subgroup_data,
)

__all__ = (
    "ElementMap",
    "FgGroup",
    "GroupElement",
    "SubgroupData",
    "lifted_matrix",
    "quotient_presentation",
    "saturate_ambient",
    "subgroup_data",
)
