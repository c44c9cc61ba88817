"""
Exhaustive verification of the matroid rank axioms and the five
multiplicity axioms over the full power set.

Created: 18/10/2026
"""

from __future__ import annotations

import enum
from typing import TYPE_CHECKING, NamedTuple

from arithmat.config import defaults
from arithmat.exceptions import CapExceededError
from arithmat.matroid import subsets
from arithmat.matroid.matroid import Backing
from arithmat.matroid.operations import dual, mu

if TYPE_CHECKING:
    from arithmat.matroid.matroid import ArithmeticMatroid


class Axiom(str, enum.Enum):
    RANK_BOUNDS = "rank-bounds"
    RANK_MONOTONE = "rank-monotone"
    RANK_SUBMODULAR = "rank-submodular"
    POSITIVE = "positive"
    DEPENDENT_DIVIDES = "1"
    INDEPENDENT_DIVIDES = "2"
    PRODUCT = "3"
    MU = "4"
    MU_STAR = "5"

    @property
    def is_rank_axiom(self) -> bool:
        return self in {Axiom.RANK_BOUNDS, Axiom.RANK_MONOTONE, Axiom.RANK_SUBMODULAR}

    @property
    def description(self) -> str:
        return _DESCRIPTIONS[self]


_DESCRIPTIONS = {
    Axiom.RANK_BOUNDS: "rk(∅) = 0 and 0 <= rk(A) <= |A|",
    Axiom.RANK_MONOTONE: "A ⊆ B implies rk(A) <= rk(B)",
    Axiom.RANK_SUBMODULAR: "rk(A ∪ B) + rk(A ∩ B) <= rk(A) + rk(B)",
    Axiom.POSITIVE: "m(A) >= 1",
    Axiom.DEPENDENT_DIVIDES: "v dependent on A implies m(A ∪ v) divides m(A)",
    Axiom.INDEPENDENT_DIVIDES: "v independent on A implies m(A) divides m(A ∪ v)",
    Axiom.PRODUCT: "m(A)·m(B) = m(A ∪ F)·m(A ∪ T) for B = A ⊔ F ⊔ T with rk(C) = rk(A) + |C ∩ F|",
    Axiom.MU: "rk(A) = rk(B) implies mu_B(A) >= 0",
    Axiom.MU_STAR: "rk*(A) = rk*(B) implies mu*_B(A) >= 0",
}


class Witness(NamedTuple):
    """
    Sublists exhibiting a violation.

    `a` and `b` always matter. For axioms (1) and (2) b = A ∪ {v}; for
    the submodular rank axiom a and b are the two sets compared; for
    axiom (3) `f` and `t` hold the partition of B - A.
    """

    axiom: Axiom
    a: int
    b: int = 0
    f: int = 0
    t: int = 0

    def replay(self, m: ArithmeticMatroid) -> bool:
        """
        Re-check the violation directly from the oracles.

        Returns:
            bool: True if the violation is still there.
        """
        return _REPLAYS[self.axiom](m, self)


def _replay_bounds(m: ArithmeticMatroid, w: Witness) -> bool:
    r = m.rank(w.a)
    return (w.a == 0 and r != 0) or not 0 <= r <= subsets.size(w.a)


def _replay_monotone(m: ArithmeticMatroid, w: Witness) -> bool:
    return subsets.is_subset(w.a, w.b) and m.rank(w.a) > m.rank(w.b)


def _replay_submodular(m: ArithmeticMatroid, w: Witness) -> bool:
    return m.rank(w.a | w.b) + m.rank(w.a & w.b) > m.rank(w.a) + m.rank(w.b)


def _replay_positive(m: ArithmeticMatroid, w: Witness) -> bool:
    return m.multiplicity(w.a) < 1


def _replay_dependent(m: ArithmeticMatroid, w: Witness) -> bool:
    dependent = m.rank(w.b) == m.rank(w.a)
    return dependent and m.multiplicity(w.a) % m.multiplicity(w.b) != 0


def _replay_independent(m: ArithmeticMatroid, w: Witness) -> bool:
    independent = m.rank(w.b) == m.rank(w.a) + 1
    return independent and m.multiplicity(w.b) % m.multiplicity(w.a) != 0


def _replay_product(m: ArithmeticMatroid, w: Witness) -> bool:
    if w.a | w.f | w.t != w.b or w.f & w.t or (w.a & (w.f | w.t)):
        return False
    if not all(m.rank(w.a | c) == m.rank(w.a) + subsets.size(c & w.f) for c in subsets.submasks(w.f | w.t)):
        return False
    return m.multiplicity(w.a) * m.multiplicity(w.b) != m.multiplicity(w.a | w.f) * m.multiplicity(w.a | w.t)


def _replay_mu(m: ArithmeticMatroid, w: Witness) -> bool:
    return m.rank(w.a) == m.rank(w.b) and mu(m, w.a, w.b) < 0


def _replay_mu_star(m: ArithmeticMatroid, w: Witness) -> bool:
    return _replay_mu(dual(m), w)


_REPLAYS = {
    Axiom.RANK_BOUNDS: _replay_bounds,
    Axiom.RANK_MONOTONE: _replay_monotone,
    Axiom.RANK_SUBMODULAR: _replay_submodular,
    Axiom.POSITIVE: _replay_positive,
    Axiom.DEPENDENT_DIVIDES: _replay_dependent,
    Axiom.INDEPENDENT_DIVIDES: _replay_independent,
    Axiom.PRODUCT: _replay_product,
    Axiom.MU: _replay_mu,
    Axiom.MU_STAR: _replay_mu_star,
}


class AxiomResult:
    def __init__(self, axiom: Axiom, witness_limit: int) -> None:
        """
        Running tally for a single axiom.
        """
        self.axiom = axiom
        self.violations = 0
        self.witnesses: list[Witness] = []
        self._limit = witness_limit

    def __repr__(self) -> str:
        return (
            self.__class__.__qualname__
            + f"(axiom={self.axiom!r}, violations={self.violations!r}, witnesses={self.witnesses!r})"
        )

    __slots__ = ("_limit", "axiom", "violations", "witnesses")

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def record(self, a: int, b: int = 0, f: int = 0, t: int = 0) -> None:
        self.violations += 1
        if len(self.witnesses) < self._limit:
            self.witnesses.append(Witness(self.axiom, a, b, f, t))


class AxiomReport:
    def __init__(self, results: dict[Axiom, AxiomResult]) -> None:
        """
        Pass/fail status, violation counts and witnesses for every axiom.
        """
        self.results = results

    def __repr__(self) -> str:
        return self.__class__.__qualname__ + f"(failed={[a.value for a in self.failed]!r})"

    __slots__ = ("results",)

    def __getitem__(self, axiom: Axiom) -> AxiomResult:
        return self.results[axiom]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results.values())

    @property
    def rank_axioms_hold(self) -> bool:
        return all(result.passed for axiom, result in self.results.items() if axiom.is_rank_axiom)

    @property
    def failed(self) -> list[Axiom]:
        return [axiom for axiom, result in self.results.items() if not result.passed]


def check_axioms(
    m: ArithmeticMatroid,
    cap: int = defaults.AXIOM_CAP,
    witness_limit: int = defaults.WITNESS_LIMIT,
) -> AxiomReport:
    """
    Check every rank and multiplicity axiom over the whole power set.

    Explicit tables are always checked. Anything else must have a
    ground set no larger than `cap`.

    Args:
        m (ArithmeticMatroid): The matroid to check.
        cap (int, optional): Largest ground set allowed for oracle-backed
            matroids. Defaults to defaults.AXIOM_CAP.
        witness_limit (int, optional): Witnesses kept per axiom.
            Defaults to defaults.WITNESS_LIMIT.

    Raises:
        CapExceededError: If `m` is oracle-backed and too large.

    Returns:
        AxiomReport: Every axiom with its violations.
    """
    if m.backing is not Backing.EXPLICIT and m.size > cap:
        raise CapExceededError("check-axioms", m.size, cap)

    results = {axiom: AxiomResult(axiom, witness_limit) for axiom in Axiom}
    _check_rank(m, results)
    rank_ok = all(results[axiom].passed for axiom in Axiom if axiom.is_rank_axiom)
    _check_divisibility(m, results)
    _check_product(m, results, rank_ok=rank_ok)
    _check_mu(m, results[Axiom.MU])
    _check_mu(dual(m), results[Axiom.MU_STAR])
    return AxiomReport(results)


def _check_rank(m: ArithmeticMatroid, results: dict[Axiom, AxiomResult]) -> None:
    # Local forms: violations here are violations of the global axioms
    # and passing them all gives a matroid rank function.
    k = m.size
    for a in range(1 << k):
        r = m.rank(a)
        if (a == 0 and r != 0) or not 0 <= r <= subsets.size(a):
            results[Axiom.RANK_BOUNDS].record(a)
        for v in range(k):
            bit = 1 << v
            if a & bit:
                continue
            rv = m.rank(a | bit)
            if rv < r:
                results[Axiom.RANK_MONOTONE].record(a, a | bit)
            elif rv > r + m.rank(bit):
                results[Axiom.RANK_SUBMODULAR].record(a, bit)
            for w in range(v + 1, k):
                other = 1 << w
                if a & other:
                    continue
                if rv + m.rank(a | other) < m.rank(a | bit | other) + r:
                    results[Axiom.RANK_SUBMODULAR].record(a | bit, a | other)


def _check_divisibility(m: ArithmeticMatroid, results: dict[Axiom, AxiomResult]) -> None:
    k = m.size
    for a in range(1 << k):
        ma = m.multiplicity(a)
        if ma < 1:
            results[Axiom.POSITIVE].record(a)
            continue
        r = m.rank(a)
        for v in range(k):
            bit = 1 << v
            if a & bit:
                continue
            b = a | bit
            mb = m.multiplicity(b)
            if mb < 1:
                continue
            rb = m.rank(b)
            if rb == r and ma % mb:
                results[Axiom.DEPENDENT_DIVIDES].record(a, b)
            elif rb == r + 1 and mb % ma:
                results[Axiom.INDEPENDENT_DIVIDES].record(a, b)


def _check_product(m: ArithmeticMatroid, results: dict[Axiom, AxiomResult], *, rank_ok: bool) -> None:
    # The rank condition on singletons C = A + e forces F to be the
    # elements of B - A that raise the rank of A, so each (A, B) has at
    # most one partition to test.
    result = results[Axiom.PRODUCT]
    full = m.full
    for a in range(1 << m.size):
        ra = m.rank(a)
        raising = 0
        for v in subsets.members(full & ~a):
            if m.rank(a | 1 << v) == ra + 1:
                raising |= 1 << v
        for extra in subsets.submasks(full & ~a):
            f = extra & raising
            t = extra & ~raising
            if not f or not t:
                # Identity holds trivially
                continue
            if rank_ok:
                applies = m.rank(a | f) == ra + subsets.size(f)
            else:
                applies = all(m.rank(a | c) == ra + subsets.size(c & f) for c in subsets.submasks(extra))
            if not applies:
                continue
            b = a | extra
            if m.multiplicity(a) * m.multiplicity(b) != m.multiplicity(a | f) * m.multiplicity(a | t):
                result.record(a, b, f, t)


def _check_mu(m: ArithmeticMatroid, result: AxiomResult) -> None:
    for b in range(1 << m.size):
        cube = subsets.subcube(b)
        width = subsets.size(b)
        values = subsets.mobius_superset([m.multiplicity(mask) for mask in cube], width)
        rb = m.rank(b)
        for position, a in enumerate(cube):
            if values[position] < 0 and m.rank(a) == rb:
                result.record(a, b)
