"""
External activity and the weighted lists of maximal rank sublists.

Created: 18/10/2026
"""

from __future__ import annotations

from typing import TYPE_CHECKING, NamedTuple

from arithmat.exceptions import NotABasisError, SubsetError
from arithmat.matroid import dual, is_basis, subsets

if TYPE_CHECKING:
    from arithmat.activity.order import ElementOrder
    from arithmat.matroid import ArithmeticMatroid


class WeightedSublist(NamedTuple):
    sublist: int
    weight: int


class Lists(NamedTuple):
    primal: list[WeightedSublist]
    dual: list[WeightedSublist]


class PairClass(NamedTuple):
    """
    The pairs (B, T) that only differ in elements that are not
    externally active on B, with their total mu weight.
    """

    basis: int
    active: int
    weight: int


def require_basis(m: ArithmeticMatroid, basis: int) -> None:
    if not is_basis(m, basis):
        raise NotABasisError(f"{m.ground.render(basis)} is not a basis")


def active_elements(m: ArithmeticMatroid, order: ElementOrder, basis: int, t: int) -> int:
    """
    The elements v of T - B that depend on the elements of B after v.

    When nothing in B comes after v, only rank zero elements count.
    """
    active = 0
    for v in subsets.members(t & ~basis):
        tail = order.after(v, basis)
        if m.rank(tail | 1 << v) == m.rank(tail):
            active |= 1 << v
    return active


def external_activity(m: ArithmeticMatroid, order: ElementOrder, basis: int, t: int) -> int:
    """
    e(B, T), the number of elements of T - B externally active on B.

    Raises:
        NotABasisError: If `basis` isn't one.
        SubsetError: If T doesn't contain B.
    """
    require_basis(m, basis)
    if not subsets.is_subset(basis, t):
        raise SubsetError(f"{m.ground.render(basis)} is not a sublist of {m.ground.render(t)}")
    return subsets.size(active_elements(m, order, basis, t))


def _sort_key(item: WeightedSublist) -> tuple[int, list[int]]:
    return (-subsets.size(item.sublist), subsets.members(item.sublist))


def maximal_rank_list(m: ArithmeticMatroid) -> list[WeightedSublist]:
    """
    Every maximal rank sublist S with mu(S) > 0, largest first.
    """
    values = subsets.mobius_superset(m.multiplicity_table(), m.size)
    r = m.total_rank
    out = [WeightedSublist(mask, w) for mask, w in enumerate(values) if w > 0 and m.rank(mask) == r]
    return sorted(out, key=_sort_key)


def build_lists(m: ArithmeticMatroid) -> Lists:
    """
    L_X from m and L_X* from its dual.
    """
    return Lists(primal=maximal_rank_list(m), dual=maximal_rank_list(dual(m)))


def pair_classes(m: ArithmeticMatroid, order: ElementOrder, basis: int) -> list[PairClass]:
    """
    Group the pairs (B, T), T in L_X containing B, by which externally
    active elements T holds. A direct count, independent of any matching.

    Raises:
        NotABasisError: If `basis` isn't one.
    """
    require_basis(m, basis)
    active_on_basis = active_elements(m, order, basis, m.full)
    grouped: dict[int, int] = {}
    for item in maximal_rank_list(m):
        if subsets.is_subset(basis, item.sublist):
            key = item.sublist & active_on_basis
            grouped[key] = grouped.get(key, 0) + item.weight
    return sorted(
        (PairClass(basis, active, weight) for active, weight in grouped.items()),
        key=lambda c: (-subsets.size(c.active), subsets.members(c.active)),
    )


def dual_pair_classes(m: ArithmeticMatroid, order: ElementOrder, basis: int) -> list[PairClass]:
    """
    The same grouping for the pairs (X - B, T~) of the dual.
    """
    require_basis(m, basis)
    return pair_classes(dual(m), order, m.full ^ basis)
