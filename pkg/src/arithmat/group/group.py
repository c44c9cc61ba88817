"""
Finitely generated abelian groups in invariant-factor form
Z^r + Z/d_1 + ... + Z/d_s and their elements.

Created: 18/10/2026
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

from arithmat.exceptions import InvalidGroupError
from arithmat.linalg import IntMatrix

if TYPE_CHECKING:
    from collections.abc import Sequence


class FgGroup:
    def __init__(self, free_rank: int, torsion: Sequence[int] = ()) -> None:
        """
        A finitely generated abelian group.

        Args:
            free_rank (int): r, the rank of the free part.
            torsion (Sequence[int], optional): The invariant factors
                d_1 | d_2 | ... | d_s, each at least 2. Defaults to ().

        Raises:
            InvalidGroupError: If the presentation isn't in
                invariant-factor form.
        """
        if free_rank < 0:
            raise InvalidGroupError(f"free rank must be nonnegative, got {free_rank}")
        torsion = tuple(int(d) for d in torsion)
        if any(d < 2 for d in torsion):
            raise InvalidGroupError(f"torsion factors must all be at least 2, got {torsion}")
        for smaller, larger in zip(torsion, torsion[1:]):
            if larger % smaller:
                raise InvalidGroupError(
                    f"torsion factors must form a divisibility chain, {smaller} does not divide {larger}"
                )

        self.free_rank = free_rank
        self.torsion = torsion

    def __repr__(self) -> str:
        return self.__class__.__qualname__ + f"(free_rank={self.free_rank!r}, torsion={self.torsion!r})"

    __slots__ = ("free_rank", "torsion")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FgGroup):
            return NotImplemented
        return (self.free_rank, self.torsion) == (other.free_rank, other.torsion)

    def __hash__(self) -> int:
        return hash((self.free_rank, self.torsion))

    def __str__(self) -> str:
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"

    @property
    def dimension(self) -> int:
        """
        Length of a coordinate vector, r + s.
        """
        return self.free_rank + len(self.torsion)

    @property
    def torsion_order(self) -> int:
        """
        |G_t|, the product of the torsion factors.
        """
        return math.prod(self.torsion)

    @property
    def is_free(self) -> bool:
        return not self.torsion

    @property
    def is_trivial(self) -> bool:
        return self.dimension == 0

    def relation_block(self) -> IntMatrix:
        """
        The lifts q_i = d_i * e_{r+i} as the columns of a matrix, Q.
        """
        columns = []
        for i, d in enumerate(self.torsion):
            column = [0] * self.dimension
            column[self.free_rank + i] = d
            columns.append(column)
        return IntMatrix.from_columns(columns, rows=self.dimension)

    def element(self, coords: Sequence[int]) -> GroupElement:
        """
        Make an element of this group, reducing torsion coordinates.

        Raises:
            InvalidGroupError: If the vector has the wrong length.
        """
        if len(coords) != self.dimension:
            raise InvalidGroupError(f"elements of {self} have {self.dimension} coordinates, got {len(coords)}")
        reduced = list(coords[: self.free_rank])
        reduced += [c % d for c, d in zip(coords[self.free_rank :], self.torsion)]
        return GroupElement(reduced)

    def zero(self) -> GroupElement:
        return GroupElement([0] * self.dimension)


class GroupElement:
    def __init__(self, coords: Sequence[int]) -> None:
        """
        Canonical coordinates of a group element. Use `FgGroup.element`
        to build one so torsion coordinates get reduced.
        """
        self.coords: tuple[int, ...] = tuple(int(c) for c in coords)

    def __repr__(self) -> str:
        return self.__class__.__qualname__ + f"({list(self.coords)!r})"

    __slots__ = ("coords",)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def free_part(self, free_rank: int) -> tuple[int, ...]:
        return self.coords[:free_rank]

    def torsion_part(self, free_rank: int) -> tuple[int, ...]:
        return self.coords[free_rank:]


class ElementMap:
    def __init__(self, matrix: IntMatrix, target: FgGroup) -> None:
        """
        A homomorphism onto `target` given by an integer matrix acting on
        lifts, followed by reduction of the torsion coordinates.

        Args:
            matrix (IntMatrix): target.dimension x (source dimension).
            target (FgGroup): Where elements land.
        """
        if matrix.rows != target.dimension:
            raise InvalidGroupError(f"map matrix has {matrix.rows} rows but {target} has dimension {target.dimension}")
        self.matrix = matrix
        self.target = target

    def __repr__(self) -> str:
        return self.__class__.__qualname__ + f"(matrix={self.matrix!r}, target={self.target!r})"

    __slots__ = ("matrix", "target")

    @property
    def moduli(self) -> tuple[int, ...]:
        """
        Per coordinate modulus, 0 meaning a free (unreduced) coordinate.
        """
        return (0,) * self.target.free_rank + self.target.torsion

    def apply(self, coords: Sequence[int]) -> GroupElement:
        return self.target.element(self.matrix.apply(coords))

    def __call__(self, element: GroupElement) -> GroupElement:
        return self.apply(element.coords)
