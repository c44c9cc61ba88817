"""
Evaluations of the arithmetic Tutte polynomial that count things,
and the unimodality and log-concavity tests on coefficient sequences.

Created: 18/10/2026
"""

from __future__ import annotations

import enum
from typing import NamedTuple

from arithmat.exceptions import SpecializationError
from arithmat.tutte.polynomials import BiPoly, UniPoly


class Specialization(str, enum.Enum):
    BASES = "bases"
    COMPONENTS = "components"
    POINCARE = "poincare"
    CHARACTERISTIC = "characteristic"
    INDEP = "indep"

    @property
    def needs_rank(self) -> bool:
        return self in {Specialization.POINCARE, Specialization.CHARACTERISTIC}


_Q = UniPoly.linear(0, 1)
_ZERO = UniPoly()
_ONE = UniPoly.constant(1)


def specialize(p: BiPoly, which: Specialization, n: int | None = None) -> int | UniPoly:
    """
    Evaluate `p` the way `which` asks.

        bases           M(1, 1)
        components      M(1, 0)
        poincare        sum of c_i (2q+1)^i q^(n-i) where M(x, 0) = sum of c_i x^i
        characteristic  (-1)^n M(1-q, 0)
        indep           M(1+q, 1)

    Args:
        p (BiPoly): The polynomial, usually M_X.
        which (Specialization): Which evaluation.
        n (int | None, optional): rk(X), needed by poincare and
            characteristic. Defaults to None.

    Raises:
        SpecializationError: If n is missing when needed, or M(x, 0)
            has degree above n for poincare.

    Returns:
        int | UniPoly: An integer for bases and components, a
            polynomial in q otherwise.
    """
    if which is Specialization.BASES:
        return int(p.evaluate(1, 1))
    if which is Specialization.COMPONENTS:
        return int(p.evaluate(1, 0))
    if which is Specialization.INDEP:
        return p.substitute(UniPoly.linear(1, 1), _ONE)
    if n is None:
        raise SpecializationError(f"the {which.value} specialization needs the rank n")
    if which is Specialization.CHARACTERISTIC:
        return p.substitute(UniPoly.linear(1, -1), _ZERO) * (-1) ** n

    restricted = p.substitute(_Q, _ZERO)
    if restricted.degree > n:
        raise SpecializationError(f"M(x, 0) has degree {restricted.degree}, more than the rank {n}")
    two_q_plus_one = UniPoly.linear(1, 2)
    total = UniPoly()
    for i, c in enumerate(restricted.coeffs):
        total = total + (two_q_plus_one**i) * (_Q ** (n - i)) * c
    return total


class SequenceReport(NamedTuple):
    unimodal: bool
    log_concave: bool


def is_unimodal(seq: list[int]) -> bool:
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i + 1 >= len(seq)


def is_log_concave(seq: list[int]) -> bool:
    return all(seq[k] ** 2 >= seq[k - 1] * seq[k + 1] for k in range(1, len(seq) - 1))


def sequence_tests(p: UniPoly) -> SequenceReport:
    """
    Unimodality and log-concavity of the absolute values of the
    coefficients of `p`.
    """
    seq = [abs(c) for c in p.coeffs]
    return SequenceReport(unimodal=is_unimodal(seq), log_concave=is_log_concave(seq))
