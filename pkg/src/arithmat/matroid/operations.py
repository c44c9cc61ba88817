"""
Derived matroids and element-level queries: duality, deletion,
contraction, restriction, direct sums, classification and the
alternating sums mu and mu*.

Derived matroids are lazy, their oracles call back into the parent
and get memoized like any other.

Created: 18/10/2026
"""

from __future__ import annotations

import enum

from arithmat.exceptions import SubsetError
from arithmat.matroid import subsets
from arithmat.matroid.matroid import ArithmeticMatroid, Backing


class ElementKind(str, enum.Enum):
    FREE = "free"
    TORSION = "torsion"
    PROPER = "proper"


def dual(m: ArithmeticMatroid) -> ArithmeticMatroid:
    """
    The dual: rk*(A) = |A| - rk(X) + rk(X - A) and m*(A) = m(X - A).
    """
    full = m.full

    def rank(mask: int) -> int:
        return subsets.size(mask) - m.total_rank + m.rank(full & ~mask)

    def multiplicity(mask: int) -> int:
        return m.multiplicity(full & ~mask)

    return ArithmeticMatroid(m.ground, rank, multiplicity, Backing.DERIVED)


def delete(m: ArithmeticMatroid, v: int) -> ArithmeticMatroid:
    """
    Restrict both oracles to sublists of X - {v}.

    Raises:
        InvalidIndexError: If v isn't a ground element.
    """
    m.check_index(v)

    def rank(mask: int) -> int:
        return m.rank(subsets.expand(mask, v))

    def multiplicity(mask: int) -> int:
        return m.multiplicity(subsets.expand(mask, v))

    return ArithmeticMatroid(m.ground.without(v), rank, multiplicity, Backing.DERIVED)


def contract(m: ArithmeticMatroid, v: int) -> ArithmeticMatroid:
    """
    rk'(A) = rk(A + v) - rk(v) and m'(A) = m(A + v) on sublists of X - {v}.

    Raises:
        InvalidIndexError: If v isn't a ground element.
    """
    m.check_index(v)
    bit = 1 << v

    def rank(mask: int) -> int:
        return m.rank(subsets.expand(mask, v) | bit) - m.rank(bit)

    def multiplicity(mask: int) -> int:
        return m.multiplicity(subsets.expand(mask, v) | bit)

    return ArithmeticMatroid(m.ground.without(v), rank, multiplicity, Backing.DERIVED)


def restrict(m: ArithmeticMatroid, keep: int) -> ArithmeticMatroid:
    """
    The sublist `keep` as a matroid in its own right, i.e. delete
    everything outside it. Elements keep their relative order.
    """
    if not subsets.is_subset(keep, m.full):
        raise SubsetError(f"{keep} is not a sublist of a ground set of size {m.size}")
    positions = subsets.members(keep)

    def lift(mask: int) -> int:
        return subsets.from_members(positions[i] for i in subsets.members(mask))

    def rank(mask: int) -> int:
        return m.rank(lift(mask))

    def multiplicity(mask: int) -> int:
        return m.multiplicity(lift(mask))

    return ArithmeticMatroid(m.ground.pick(positions), rank, multiplicity, Backing.DERIVED)


def direct_sum(m1: ArithmeticMatroid, m2: ArithmeticMatroid) -> ArithmeticMatroid:
    """
    m1 on the low positions, m2 on the high ones. Ranks add and
    multiplicities multiply.
    """
    shift = m1.size
    low = m1.full

    def rank(mask: int) -> int:
        return m1.rank(mask & low) + m2.rank(mask >> shift)

    def multiplicity(mask: int) -> int:
        return m1.multiplicity(mask & low) * m2.multiplicity(mask >> shift)

    return ArithmeticMatroid(m1.ground.joined(m2.ground), rank, multiplicity, Backing.DERIVED)


def classify(m: ArithmeticMatroid, v: int) -> ElementKind:
    """
    Free if removing v drops the total rank, torsion if v has rank
    zero, proper otherwise.

    Raises:
        InvalidIndexError: If v isn't a ground element.
    """
    m.check_index(v)
    if m.rank(m.full & ~(1 << v)) == m.total_rank - 1:
        return ElementKind.FREE
    if m.rank(1 << v) == 0:
        return ElementKind.TORSION
    return ElementKind.PROPER


def is_molecule(m: ArithmeticMatroid) -> bool:
    """
    True when no element is proper.
    """
    return all(classify(m, v) is not ElementKind.PROPER for v in range(m.size))


def mu(m: ArithmeticMatroid, a: int, b: int) -> int:
    """
    mu_B(A), the alternating sum of m(T) over A <= T <= B.

    Raises:
        SubsetError: If A is not inside B.
    """
    if not subsets.is_subset(a, b):
        raise SubsetError(f"{m.ground.render(a)} is not a sublist of {m.ground.render(b)}")
    total = 0
    for extra in subsets.submasks(b & ~a):
        sign = -1 if subsets.size(extra) % 2 else 1
        total += sign * m.multiplicity(a | extra)
    return total


def mu_star(m: ArithmeticMatroid, a: int, b: int) -> int:
    """
    mu*_B(A), the alternating sum of m(X - T) over A <= T <= B.
    """
    return mu(dual(m), a, b)


def bases(m: ArithmeticMatroid) -> list[int]:
    """
    Every basis, as bitmasks in increasing order.
    """
    r = m.total_rank
    return [mask for mask in range(1 << m.size) if subsets.size(mask) == r and m.rank(mask) == r]


def is_basis(m: ArithmeticMatroid, mask: int) -> bool:
    r = m.total_rank
    return subsets.is_subset(mask, m.full) and subsets.size(mask) == r and m.rank(mask) == r
