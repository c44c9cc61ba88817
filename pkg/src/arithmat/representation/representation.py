"""
Arithmetic matroids represented by a list of elements in a finitely
generated abelian group, and their Gale duals.

Created: 18/10/2026
"""

from __future__ import annotations

import functools
from typing import TYPE_CHECKING, NamedTuple

from arithmat.config import defaults
from arithmat.exceptions import CapExceededError
from arithmat.group import FgGroup, GroupElement, SubgroupData, quotient_presentation, saturate_ambient, subgroup_data
from arithmat.linalg import IntMatrix, rank
from arithmat.matroid import ArithmeticMatroid, Backing, GroundSet, dual, subsets

if TYPE_CHECKING:
    from collections.abc import Sequence


class Representation:
    def __init__(
        self,
        group: FgGroup,
        elements: Sequence[GroupElement | Sequence[int]],
        labels: Sequence[str] | None = None,
    ) -> None:
        """
        A finite list X of elements of G.

        If <X> has infinite index in G the ambient group is replaced
        by the saturation G_X and X is re-expressed in it, so afterwards
        rk(X) always equals the free rank of `group`.

        Args:
            group (FgGroup): The ambient group G.
            elements (Sequence[GroupElement | Sequence[int]]): The list X,
                as elements or raw coordinate vectors.
            labels (Sequence[str] | None, optional): Element names.
                Defaults to None.

        Raises:
            InvalidGroupError: If an element has the wrong length.
            InvalidGroundSetError: If the labels don't fit.
        """
        canonical = [group.element(e.coords if isinstance(e, GroupElement) else e) for e in elements]
        free = IntMatrix.from_columns([list(e.free_part(group.free_rank)) for e in canonical], rows=group.free_rank)
        if rank(free) < group.free_rank:
            group, canonical = saturate_ambient(group, canonical)

        self.group = group
        self.elements: tuple[GroupElement, ...] = tuple(canonical)
        self.ground = GroundSet(len(canonical), labels)

    def __repr__(self) -> str:
        return (
            self.__class__.__qualname__
            + f"(group={self.group!r}, elements={[list(e.coords) for e in self.elements]!r},"
            f" labels={self.ground.labels!r})"
        )

    __slots__ = ("elements", "ground", "group")

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self.ground.labels

    def relation_block(self) -> IntMatrix:
        """
        Q, the lifts of the torsion relations.
        """
        return self.group.relation_block()

    def matrix(self) -> IntMatrix:
        """
        [X | Q] with the lifts of X as the first k columns, in list order.
        """
        columns = [list(e.coords) for e in self.elements]
        return IntMatrix.from_columns(columns, rows=self.group.dimension).hstack(self.relation_block())

    def pick(self, mask: int) -> list[GroupElement]:
        return [self.elements[i] for i in subsets.members(mask)]

    def data(self, mask: int) -> SubgroupData:
        return subgroup_data(self.group, self.pick(mask))


def from_representation(r: Representation) -> ArithmeticMatroid:
    """
    The arithmetic matroid of a representation, m(A) = |G_A : <A>|.

    Both oracles share one subgroup computation per sublist.
    """

    @functools.lru_cache(maxsize=None)
    def data(mask: int) -> SubgroupData:
        return r.data(mask)

    return ArithmeticMatroid(
        r.ground,
        lambda mask: data(mask).rank,
        lambda mask: data(mask).multiplicity,
        backing=Backing.REPRESENTATION,
    )


def gale_dual(r: Representation) -> Representation:
    """
    A representation of the dual arithmetic matroid.

    The rows of [X | Q] generate a sublattice of Z^(k+s); G' is the
    quotient by it, in invariant-factor form, and X' is the list of
    images of the first k standard basis vectors, in order.
    """
    k = r.size
    n = k + len(r.group.torsion)
    relations = r.matrix().to_rows()
    ambient = FgGroup(n)
    quotient, projection = quotient_presentation(ambient, [ambient.element(row) for row in relations])
    images = []
    for i in range(k):
        unit = [0] * n
        unit[i] = 1
        images.append(projection.apply(unit))
    return Representation(quotient, images, labels=r.labels)


class Discrepancy(NamedTuple):
    sublist: int
    field: str
    expected: int
    actual: int


class DualIsoReport(NamedTuple):
    passed: bool
    discrepancies: list[Discrepancy]


def verify_dual_iso(r: Representation, cap: int = defaults.AXIOM_CAP) -> DualIsoReport:
    """
    Compare the Gale dual's oracles against the abstract dual on
    every sublist.

    Raises:
        CapExceededError: If the ground set is larger than `cap`.
    """
    if r.size > cap:
        raise CapExceededError("gale-dual verification", r.size, cap)
    expected = dual(from_representation(r))
    actual = from_representation(gale_dual(r))
    discrepancies = []
    for mask in range(1 << r.size):
        if expected.rank(mask) != actual.rank(mask):
            discrepancies.append(Discrepancy(mask, "rank", expected.rank(mask), actual.rank(mask)))
        if expected.multiplicity(mask) != actual.multiplicity(mask):
            discrepancies.append(
                Discrepancy(mask, "multiplicity", expected.multiplicity(mask), actual.multiplicity(mask))
            )
    return DualIsoReport(passed=not discrepancies, discrepancies=discrepancies)
