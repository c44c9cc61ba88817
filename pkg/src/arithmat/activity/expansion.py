"""
Rebuilding the Tutte polynomials from activities: the arithmetic
one from the per-basis matchings, the classical one basis by basis.

Created: 18/10/2026
"""

from __future__ import annotations

import functools
from concurrent.futures import ThreadPoolExecutor
from typing import TYPE_CHECKING, NamedTuple

from arithmat.activity.lists import active_elements, require_basis
from arithmat.activity.matching import psi_matching
from arithmat.activity.order import ElementOrder
from arithmat.matroid import bases, dual, subsets
from arithmat.tutte import BiPoly

if TYPE_CHECKING:
    from arithmat.activity.matching import Matching
    from arithmat.matroid import ArithmeticMatroid


def summand(matching: Matching) -> BiPoly:
    """
    count * x^(dual activity) * y^(primal activity) over a matching.
    """
    total = BiPoly()
    for entry in matching.entries:
        x_power = subsets.size(entry.dual.active)
        y_power = subsets.size(entry.primal.active)
        total = total + BiPoly.monomial(entry.count, x_power, y_power)
    return total


def basis_contribution(m: ArithmeticMatroid, order: ElementOrder, basis: int) -> BiPoly:
    """
    One basis's summand of the activity expansion.
    """
    return summand(psi_matching(m, order, basis))


def all_matchings(m: ArithmeticMatroid, order: ElementOrder | None = None, workers: int = 1) -> list[Matching]:
    """
    The matching of every basis, in basis order.

    Bases are independent so they can be spread over `workers`
    threads.
    """
    order = order or ElementOrder.default(m.size)
    every = bases(m)
    match = functools.partial(psi_matching, m, order)
    if workers > 1 and len(every) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(match, every))
    return [match(b) for b in every]


def mbar(m: ArithmeticMatroid, order: ElementOrder | None = None, workers: int = 1) -> BiPoly:
    """
    The sum of the summands of every basis's matching.
    """
    total = BiPoly()
    for matching in all_matchings(m, order, workers):
        total = total + summand(matching)
    return total


class BasisActivity(NamedTuple):
    basis: int
    internal: int
    external: int


def basis_activities(m: ArithmeticMatroid, order: ElementOrder, basis: int) -> BasisActivity:
    """
    e(B) over X, and e*(X - B) in the dual, with full (not local) activity.
    """
    require_basis(m, basis)
    co_basis = m.full ^ basis
    external = active_elements(m, order, basis, m.full)
    internal = active_elements(dual(m), order, co_basis, m.full)
    return BasisActivity(basis, subsets.size(internal), subsets.size(external))


def crapo_tutte(m: ArithmeticMatroid, order: ElementOrder | None = None) -> BiPoly:
    """
    The classical Tutte polynomial as a sum over bases of x^e*(X - B) y^e(B).
    """
    order = order or ElementOrder.default(m.size)
    total = BiPoly()
    for b in bases(m):
        activity = basis_activities(m, order, b)
        total = total + BiPoly.monomial(1, activity.internal, activity.external)
    return total
