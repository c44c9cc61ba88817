"""
Total orders on the ground list.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from arithmat.exceptions import InvalidGroundSetError, InvalidOrderError
from arithmat.matroid import subsets

if TYPE_CHECKING:
    from collections.abc import Sequence

    from arithmat.matroid import GroundSet


class ElementOrder:
    def __init__(self, sequence: Sequence[int]) -> None:
        """
        A total order on ground indices 0..k-1, listed from smallest
        to greatest.

        Raises:
            InvalidOrderError: If `sequence` isn't a permutation of 0..k-1.
        """
        sequence = tuple(sequence)
        if sorted(sequence) != list(range(len(sequence))):
            raise InvalidOrderError(f"{list(sequence)} is not a permutation of 0..{len(sequence) - 1}")
        self.sequence = sequence
        positions = [0] * len(sequence)
        for position, i in enumerate(sequence):
            positions[i] = position
        self._positions = tuple(positions)

    def __repr__(self) -> str:
        return self.__class__.__qualname__ + f"({list(self.sequence)!r})"

    __slots__ = ("_positions", "sequence")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementOrder):
            return NotImplemented
        return self.sequence == other.sequence

    def __hash__(self) -> int:
        return hash(self.sequence)

    def __len__(self) -> int:
        return len(self.sequence)

    @classmethod
    def default(cls, size: int) -> ElementOrder:
        """
        Input order.
        """
        return cls(range(size))

    @classmethod
    def parse(cls, text: str, ground: GroundSet) -> ElementOrder:
        """
        Read an order like "2,0,1" or "c,a,b", smallest first.

        Raises:
            InvalidOrderError: If a name is unknown or the list isn't
                a permutation of the ground set.
        """
        names = [name.strip() for name in text.split(",") if name.strip()]
        try:
            indices = [ground.index(name) for name in names]
        except InvalidGroundSetError as e:
            raise InvalidOrderError(e.message) from e
        if len(indices) != ground.size:
            raise InvalidOrderError(f"order lists {len(indices)} elements but the ground set has {ground.size}")
        return cls(indices)

    def position(self, i: int) -> int:
        return self._positions[i]

    def after(self, i: int, mask: int) -> int:
        """
        The members of `mask` that come after i.
        """
        here = self._positions[i]
        return subsets.from_members(j for j in subsets.members(mask) if self._positions[j] > here)

    def render(self, ground: GroundSet) -> str:
        return "<".join(ground.name(i) for i in self.sequence)
