from __future__ import annotations

from arithmat.matroid import subsets
from arithmat.matroid.axioms import Axiom, AxiomReport, AxiomResult, Witness, check_axioms
from arithmat.matroid.matroid import ArithmeticMatroid, Backing, GroundSet
from arithmat.matroid.operations import (
    ElementKind,
    bases,
    classify,
    contract,
    delete,
    direct_sum,
    dual,
    is_basis,
    is_molecule,
    mu,
    mu_star,
    restrict,
)

__all__ = (
    "ArithmeticMatroid",
    "Axiom",
    "AxiomReport",
    "AxiomResult",
    "Backing",
    "ElementKind",
    "GroundSet",
    "Witness",
    "bases",
    "check_axioms",
    "classify",
    "contract",
    "delete",
    "direct_sum",
    "dual",
    "is_basis",
    "is_molecule",
    "mu",
    "mu_star",
    "restrict",
    "subsets",
)
