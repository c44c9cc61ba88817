"""
Subgroups, quotients and saturation, all computed on lifts to
Z^(r+s) alongside the relation block Q.

Created: 18/10/2026
"""

from __future__ import annotations

from typing import TYPE_CHECKING, NamedTuple

from arithmat.group.group import ElementMap, FgGroup, GroupElement
from arithmat.linalg import IntMatrix, gcd_maximal_minors, rank, snf

if TYPE_CHECKING:
    from collections.abc import Sequence


class SubgroupData(NamedTuple):
    rank: int
    multiplicity: int


def lifted_matrix(g: FgGroup, elements: Sequence[GroupElement]) -> IntMatrix:
    """
    The matrix [A | Q]: lifts of `elements` as columns followed by
    the relation block of `g`.
    """
    columns = [list(e.coords) for e in elements]
    return IntMatrix.from_columns(columns, rows=g.dimension).hstack(g.relation_block())


def subgroup_data(g: FgGroup, elements: Sequence[GroupElement]) -> SubgroupData:
    """
    Rank of <A> and its index in the saturation G_A.

    Args:
        g (FgGroup): The ambient group.
        elements (Sequence[GroupElement]): The sublist A.

    Returns:
        SubgroupData: (rank([A | Q]) - s, gcd_maximal_minors([A | Q])).
    """
    matrix = lifted_matrix(g, elements)
    return SubgroupData(
        rank=rank(matrix) - len(g.torsion),
        multiplicity=gcd_maximal_minors(matrix),
    )


def quotient_presentation(g: FgGroup, h: Sequence[GroupElement]) -> tuple[FgGroup, ElementMap]:
    """
    The quotient G/<h> in invariant-factor form.

    Coordinates come from the left transform of the Smith form of
    [h | Q]: rows with a zero (or missing) invariant factor are free,
    rows with factor 1 vanish and the rest are torsion.

    Returns:
        tuple[FgGroup, ElementMap]: The quotient and the map sending
            elements of `g` to their canonical quotient coordinates.
    """
    matrix = lifted_matrix(g, h)
    result = snf(matrix)
    d = list(result.d) + [0] * (g.dimension - len(result.d))

    free_rows = [i for i, x in enumerate(d) if x == 0]
    torsion_rows = [i for i, x in enumerate(d) if x >= 2]
    quotient = FgGroup(len(free_rows), [d[i] for i in torsion_rows])
    projection = result.u.select_rows(free_rows + torsion_rows)
    return quotient, ElementMap(projection, quotient)


def saturate_ambient(g: FgGroup, x: Sequence[GroupElement]) -> tuple[FgGroup, list[GroupElement]]:
    """
    Replace G by G_X, the saturation of <x>, re-expressing x in it.

    Only the free coordinates move: G_X is the saturation of the free
    projections of x plus all of G_t, so torsion coordinates come
    along unchanged and every subgroup_data value is preserved.
    """
    r = g.free_rank
    free = IntMatrix.from_columns([list(e.free_part(r)) for e in x], rows=r)
    result = snf(free)
    rho = result.rank
    ambient = FgGroup(rho, g.torsion)
    coords = [list(result.u.apply(e.free_part(r))[:rho]) + list(e.torsion_part(r)) for e in x]
    return ambient, [ambient.element(c) for c in coords]
