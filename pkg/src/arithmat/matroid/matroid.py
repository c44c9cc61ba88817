"""
The arithmetic matroid: a ground list with rank and multiplicity
oracles on its sublists.

Created: 18/10/2026
"""

from __future__ import annotations

import enum
import threading
from collections.abc import Mapping
from typing import TYPE_CHECKING

from arithmat.exceptions import InputError, InvalidGroundSetError, InvalidIndexError
from arithmat.matroid import subsets

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence


class Backing(str, enum.Enum):
    EXPLICIT = "explicit"
    REPRESENTATION = "representation"
    DERIVED = "derived"


class GroundSet:
    def __init__(self, size: int, labels: Sequence[str] | None = None) -> None:
        """
        The ground list X. Positions are what matter, so repeated
        vectors in a list are still distinct elements.

        Args:
            size (int): k, the number of elements.
            labels (Sequence[str] | None, optional): Names for the
                elements. Defaults to None (use indices).

        Raises:
            InvalidGroundSetError: Bad size, wrong number of labels or
                repeated labels.
        """
        if size < 0:
            raise InvalidGroundSetError(f"ground size must be nonnegative, got {size}")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != size:
                raise InvalidGroundSetError(f"got {len(labels)} labels for a ground set of size {size}")
            if len(set(labels)) != size:
                raise InvalidGroundSetError(f"labels must be distinct, got {list(labels)}")
        self.size = size
        self.labels: tuple[str, ...] | None = labels

    def __repr__(self) -> str:
        return self.__class__.__qualname__ + f"(size={self.size!r}, labels={self.labels!r})"

    __slots__ = ("labels", "size")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroundSet):
            return NotImplemented
        return (self.size, self.labels) == (other.size, other.labels)

    def __hash__(self) -> int:
        return hash((self.size, self.labels))

    def name(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def names(self, mask: int) -> list[str]:
        return [self.name(i) for i in subsets.members(mask)]

    def render(self, mask: int) -> str:
        """
        A sublist as text, e.g. {a,b}.
        """
        return "{" + ",".join(self.names(mask)) + "}"

    def index(self, name: str) -> int:
        """
        Look up an element by label (or index, when unlabelled).

        Raises:
            InvalidGroundSetError: If nothing answers to `name`.
        """
        if self.labels is not None and name in self.labels:
            return self.labels.index(name)
        if name.isdigit() and int(name) < self.size:
            return int(name)
        raise InvalidGroundSetError(f"no ground element called {name!r}")

    def without(self, v: int) -> GroundSet:
        labels = None if self.labels is None else self.labels[:v] + self.labels[v + 1 :]
        return GroundSet(self.size - 1, labels)

    def pick(self, indices: Sequence[int]) -> GroundSet:
        labels = None if self.labels is None else [self.labels[i] for i in indices]
        return GroundSet(len(indices), labels)

    def joined(self, other: GroundSet) -> GroundSet:
        """
        Disjoint union, keeping labels only if they stay distinct.
        """
        left = self.labels or tuple(str(i) for i in range(self.size))
        right = other.labels or tuple(str(i) for i in range(other.size))
        if self.labels is None and other.labels is None:
            return GroundSet(self.size + other.size)
        labels = left + right
        if len(set(labels)) != len(labels):
            return GroundSet(self.size + other.size)
        return GroundSet(self.size + other.size, labels)


class _Memo:
    """
    Thread-safe memo of an int -> int oracle.
    """

    __slots__ = ("_fn", "_lock", "_values")

    def __init__(self, fn: Callable[[int], int]) -> None:
        self._fn = fn
        self._values: dict[int, int] = {}
        self._lock = threading.Lock()

    def __call__(self, mask: int) -> int:
        with self._lock:
            if mask in self._values:
                return self._values[mask]
        # Computed outside the lock, oracles may call into other memos
        value = self._fn(mask)
        with self._lock:
            return self._values.setdefault(mask, value)


class ArithmeticMatroid:
    def __init__(
        self,
        ground: GroundSet,
        rank: Callable[[int], int],
        multiplicity: Callable[[int], int],
        backing: Backing = Backing.DERIVED,
    ) -> None:
        """
        A ground list with memoized rank and multiplicity oracles.

        Oracles take a sublist as a bitmask. Nothing is validated
        here, `check_axioms` is the place for that.

        Args:
            ground (GroundSet): The ground list.
            rank (Callable[[int], int]): rk on sublists.
            multiplicity (Callable[[int], int]): m on sublists.
            backing (Backing, optional): Where the values come from.
                Defaults to Backing.DERIVED.
        """
        self.ground = ground
        self.backing = backing
        self._rank = _Memo(rank)
        self._multiplicity = _Memo(multiplicity)

    def __repr__(self) -> str:
        return self.__class__.__qualname__ + f"(ground={self.ground!r}, backing={self.backing.value!r})"

    __slots__ = ("_multiplicity", "_rank", "backing", "ground")

    @classmethod
    def from_tables(
        cls,
        size: int,
        ranks: Sequence[int] | Mapping[int, int],
        multiplicities: Sequence[int] | Mapping[int, int],
        labels: Sequence[str] | None = None,
    ) -> ArithmeticMatroid:
        """
        An explicit-table matroid holding all 2^k values.

        Raises:
            InputError: If either table is missing a sublist.
        """
        ground = GroundSet(size, labels)
        rank_table = _table(ranks, size, "rank")
        mult_table = _table(multiplicities, size, "multiplicity")
        return cls(ground, rank_table.__getitem__, mult_table.__getitem__, backing=Backing.EXPLICIT)

    @property
    def size(self) -> int:
        return self.ground.size

    @property
    def full(self) -> int:
        return subsets.full(self.ground.size)

    def rank(self, mask: int) -> int:
        return self._rank(mask)

    def multiplicity(self, mask: int) -> int:
        return self._multiplicity(mask)

    @property
    def total_rank(self) -> int:
        """
        rk(X).
        """
        return self.rank(self.full)

    def check_index(self, v: int) -> None:
        if not 0 <= v < self.size:
            raise InvalidIndexError(v, self.size)

    def rank_table(self) -> list[int]:
        return [self.rank(mask) for mask in range(1 << self.size)]

    def multiplicity_table(self) -> list[int]:
        return [self.multiplicity(mask) for mask in range(1 << self.size)]

    def to_tables(self) -> ArithmeticMatroid:
        """
        Materialize every oracle value into an explicit-table matroid.
        """
        return ArithmeticMatroid.from_tables(
            self.size,
            self.rank_table(),
            self.multiplicity_table(),
            labels=self.ground.labels,
        )

    def same_oracles(self, other: ArithmeticMatroid) -> bool:
        """
        Equal size and equal rank and multiplicity on every sublist.
        """
        if self.size != other.size:
            return False
        return all(
            self.rank(mask) == other.rank(mask) and self.multiplicity(mask) == other.multiplicity(mask)
            for mask in range(1 << self.size)
        )


def _table(values: Sequence[int] | Mapping[int, int], size: int, what: str) -> tuple[int, ...]:
    count = 1 << size
    if isinstance(values, Mapping):
        missing = [mask for mask in range(count) if mask not in values]
        if missing:
            raise InputError(f"{what} table is missing {len(missing)} sublist(s), first missing key {missing[0]}")
        return tuple(int(values[mask]) for mask in range(count))
    if len(values) != count:
        raise InputError(f"{what} table needs {count} entries for a ground set of size {size}, got {len(values)}")
    return tuple(int(v) for v in values)
