"""
Per-basis equidistributed matchings between the primal pairs (B, T)
and the dual pairs (X - B, T~).

On a molecule the count between two classes is the closed form
mu(T) mu*(T~) / m(B). Anything else is reduced to a molecule first by
contracting or deleting its greatest proper element, then the classes
are pulled back to the original ground list.

Created: 18/10/2026
"""

from __future__ import annotations

from collections import defaultdict
from typing import TYPE_CHECKING, NamedTuple

from arithmat.activity.lists import PairClass, build_lists, require_basis
from arithmat.exceptions import NonIntegralMatchingError, NotABasisError, NotAMoleculeError
from arithmat.matroid import ElementKind, classify, contract, delete, subsets

if TYPE_CHECKING:
    from arithmat.activity.order import ElementOrder
    from arithmat.matroid import ArithmeticMatroid


class MatchingEntry(NamedTuple):
    primal: PairClass
    dual: PairClass
    count: int


class Matching:
    def __init__(self, basis: int, entries: list[MatchingEntry]) -> None:
        """
        The matching for one basis B, weight compressed: `count` pairs
        of the primal class go to pairs of the dual class.
        """
        self.basis = basis
        self.entries = entries

    def __repr__(self) -> str:
        return self.__class__.__qualname__ + f"(basis={self.basis!r}, entries={self.entries!r})"

    __slots__ = ("basis", "entries")

    @property
    def mass(self) -> int:
        return sum(entry.count for entry in self.entries)

    def primal_classes(self) -> list[PairClass]:
        return list(dict.fromkeys(entry.primal for entry in self.entries))

    def dual_classes(self) -> list[PairClass]:
        return list(dict.fromkeys(entry.dual for entry in self.entries))

    def row_sums(self) -> dict[PairClass, int]:
        sums: defaultdict[PairClass, int] = defaultdict(int)
        for entry in self.entries:
            sums[entry.primal] += entry.count
        return dict(sums)

    def column_sums(self) -> dict[PairClass, int]:
        sums: defaultdict[PairClass, int] = defaultdict(int)
        for entry in self.entries:
            sums[entry.dual] += entry.count
        return dict(sums)

    def is_equidistributed(self) -> bool:
        """
        Every count positive and every class's pairs fully used.
        """
        if any(entry.count < 1 for entry in self.entries):
            return False
        rows_ok = all(total == pc.weight for pc, total in self.row_sums().items())
        columns_ok = all(total == pc.weight for pc, total in self.column_sums().items())
        return rows_ok and columns_ok


def molecular_matching(m: ArithmeticMatroid, basis: int | None = None) -> Matching:
    """
    The matching on a molecule, whose only basis is its free elements.

    Args:
        m (ArithmeticMatroid): A matroid with no proper elements.
        basis (int | None, optional): The basis, if the caller already
            knows it. Defaults to None.

    Raises:
        NotAMoleculeError: If `m` has a proper element.
        NotABasisError: If `basis` isn't the unique basis.
        NonIntegralMatchingError: If a count isn't an integer, which
            means the multiplicities break the axioms.
    """
    kinds = [classify(m, v) for v in range(m.size)]
    if ElementKind.PROPER in kinds:
        proper = subsets.from_members(i for i, k in enumerate(kinds) if k is ElementKind.PROPER)
        raise NotAMoleculeError(f"not a molecule, {m.ground.render(proper)} are proper")
    unique = subsets.from_members(i for i, k in enumerate(kinds) if k is ElementKind.FREE)
    if basis is not None and basis != unique:
        raise NotABasisError(
            f"a molecule has the single basis {m.ground.render(unique)}, not {m.ground.render(basis)}"
        )

    co_basis = m.full ^ unique
    lists = build_lists(m)
    primal = [PairClass(unique, item.sublist & ~unique, item.weight) for item in lists.primal]
    dual = [PairClass(co_basis, item.sublist & ~co_basis, item.weight) for item in lists.dual]
    mass = m.multiplicity(unique)

    entries = []
    for p in primal:
        for d in dual:
            count, remainder = divmod(p.weight * d.weight, mass)
            if remainder:
                raise NonIntegralMatchingError(
                    f"mu({m.ground.render(p.active | unique)}) * mu*({m.ground.render(d.active | co_basis)})"
                    f" = {p.weight * d.weight} is not divisible by m(B) = {mass}"
                )
            entries.append(MatchingEntry(p, d, count))
    return Matching(unique, entries)


def psi_matching(m: ArithmeticMatroid, order: ElementOrder, basis: int) -> Matching:
    """
    The matching for any basis B.

    Repeatedly take the greatest proper element v: contract it if it
    is in B, delete it otherwise. Deleted elements are never active on
    B, so pairs that differ only in v merge into one class. Once a
    molecule is left, match there and lift the classes back.

    Raises:
        NotABasisError: If `basis` isn't one.
    """
    require_basis(m, basis)
    current = m
    reduced = basis
    alive = list(range(m.size))
    while True:
        proper = [v for v in range(current.size) if classify(current, v) is ElementKind.PROPER]
        if not proper:
            break
        v = max(proper, key=lambda i: order.position(alive[i]))
        current = contract(current, v) if subsets.contains(reduced, v) else delete(current, v)
        reduced = subsets.compress(reduced, v)
        del alive[v]

    def lift(mask: int) -> int:
        return subsets.from_members(alive[i] for i in subsets.members(mask))

    co_basis = m.full ^ basis
    entries = [
        MatchingEntry(
            PairClass(basis, lift(entry.primal.active), entry.primal.weight),
            PairClass(co_basis, lift(entry.dual.active), entry.dual.weight),
            entry.count,
        )
        for entry in molecular_matching(current, reduced).entries
    ]
    return Matching(basis, entries)
