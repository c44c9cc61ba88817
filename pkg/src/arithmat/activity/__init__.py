from __future__ import annotations

from arithmat.activity.expansion import (
    BasisActivity,
    all_matchings,
    basis_activities,
    basis_contribution,
    crapo_tutte,
    mbar,
    summand,
)
from arithmat.activity.lists import (
    Lists,
    PairClass,
    WeightedSublist,
    active_elements,
    build_lists,
    dual_pair_classes,
    external_activity,
    maximal_rank_list,
    pair_classes,
)
from arithmat.activity.matching import Matching, MatchingEntry, molecular_matching, psi_matching
from arithmat.activity.order import ElementOrder

__all__ = (
    "BasisActivity",
    "ElementOrder",
    "Lists",
    "Matching",
    "MatchingEntry",
    "PairClass",
    "WeightedSublist",
    "active_elements",
    "all_matchings",
    "basis_activities",
    "basis_contribution",
    "build_lists",
    "crapo_tutte",
    "dual_pair_classes",
    "external_activity",
    "maximal_rank_list",
    "mbar",
    "molecular_matching",
    "pair_classes",
    "psi_matching",
    "summand",
)
