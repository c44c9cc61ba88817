"""
The arithmetic Tutte polynomial by subset-sum and by deletion and
contraction, and the classical Tutte polynomial.

Created: 18/10/2026
"""

from __future__ import annotations

from collections import defaultdict
from typing import TYPE_CHECKING

from arithmat.config import defaults
from arithmat.exceptions import CapExceededError
from arithmat.matroid import ElementKind, classify, contract, delete, subsets
from arithmat.tutte.polynomials import BiPoly

if TYPE_CHECKING:
    from collections.abc import Callable

    from arithmat.matroid import ArithmeticMatroid


def _subset_sum(m: ArithmeticMatroid, weight: Callable[[int], int], cap: int) -> BiPoly:
    if m.size > cap:
        raise CapExceededError("subset-sum", m.size, cap)
    total = m.total_rank
    # Group by (corank, nullity) first, the binomials get expanded once per group
    weights: defaultdict[tuple[int, int], int] = defaultdict(int)
    for mask in range(1 << m.size):
        r = m.rank(mask)
        weights[(total - r, subsets.size(mask) - r)] += weight(mask)
    return BiPoly.corank_nullity(weights)


def arithmetic_tutte_subsetsum(m: ArithmeticMatroid, cap: int = defaults.SUBSET_CAP) -> BiPoly:
    """
    M(x, y) = sum over A of m(A) (x-1)^(rk(X)-rk(A)) (y-1)^(|A|-rk(A)).

    Works for any multiplicity table, valid or not.

    Raises:
        CapExceededError: If the ground set is larger than `cap`.
    """
    return _subset_sum(m, m.multiplicity, cap)


def classical_tutte(m: ArithmeticMatroid, cap: int = defaults.SUBSET_CAP) -> BiPoly:
    """
    T(x, y), the same sum with every multiplicity taken as 1.

    Raises:
        CapExceededError: If the ground set is larger than `cap`.
    """
    return _subset_sum(m, lambda _: 1, cap)


_X_MINUS_ONE = BiPoly.x() - 1
_Y_MINUS_ONE = BiPoly.y() - 1


def arithmetic_tutte_delcon(m: ArithmeticMatroid) -> BiPoly:
    """
    M(x, y) by recursion on the greatest-index element of the first
    kind present, in the order proper, free, torsion:

        proper:  M = M(X - v) + M(X / v)
        free:    M = (x-1) M(X - v) + M(X / v)
        torsion: M = M(X - v) + (y-1) M(X / v)

    The empty matroid gives the constant m(∅). Only meaningful for
    matroids that satisfy the axioms.
    """
    if m.size == 0:
        return BiPoly.constant(m.multiplicity(0))

    kinds = [classify(m, v) for v in range(m.size)]
    kind = next(k for k in (ElementKind.PROPER, ElementKind.FREE, ElementKind.TORSION) if k in kinds)
    v = max(i for i, k in enumerate(kinds) if k is kind)

    deleted = arithmetic_tutte_delcon(delete(m, v))
    contracted = arithmetic_tutte_delcon(contract(m, v))
    if kind is ElementKind.FREE:
        return _X_MINUS_ONE * deleted + contracted
    if kind is ElementKind.TORSION:
        return deleted + _Y_MINUS_ONE * contracted
    return deleted + contracted
