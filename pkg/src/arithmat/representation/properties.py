"""
Necessary conditions for representability. Passing these never
means a matroid is representable.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

from arithmat.matroid import subsets

if TYPE_CHECKING:
    from arithmat.matroid import ArithmeticMatroid


def is_torsion_free(m: ArithmeticMatroid) -> bool:
    return m.multiplicity(0) == 1


def maximal_independent(m: ArithmeticMatroid, a: int) -> list[int]:
    """
    The maximal independent sublists of `a`, i.e. its bases.
    """
    ra = m.rank(a)
    return [s for s in subsets.submasks(a) if subsets.size(s) == ra and m.rank(s) == ra]


def is_gcd(m: ArithmeticMatroid) -> bool:
    """
    Whether every m(A) is the GCD of m over the maximal independent
    sublists of A.
    """
    for a in range(1 << m.size):
        gcd = math.gcd(*(m.multiplicity(s) for s in maximal_independent(m, a)))
        if gcd != m.multiplicity(a):
            return False
    return True
