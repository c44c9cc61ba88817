"""
The points of a generalized toric arrangement: finite-order characters
of G, written additively with values in Q/Z, killed by a basis.

Created: 18/10/2026
"""

from __future__ import annotations

import functools
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import TYPE_CHECKING, NamedTuple

from arithmat.exceptions import RankDeficiencyError
from arithmat.linalg import rank, snf
from arithmat.matroid import bases, restrict, subsets
from arithmat.representation import from_representation
from arithmat.tutte import BiPoly, UniPoly, arithmetic_tutte_subsetsum, classical_tutte

if TYPE_CHECKING:
    from collections.abc import Sequence

    from arithmat.group import GroupElement
    from arithmat.matroid import ArithmeticMatroid
    from arithmat.representation import Representation


def _mod_one(value: Fraction) -> Fraction:
    return value - (value.numerator // value.denominator)


class TorusPoint:
    def __init__(self, values: Sequence[Fraction | int]) -> None:
        """
        A point of T(G), one value in [0, 1) per coordinate of G.
        """
        self.values: tuple[Fraction, ...] = tuple(_mod_one(Fraction(v)) for v in values)

    def __repr__(self) -> str:
        return self.__class__.__qualname__ + f"({self.render()!r})"

    __slots__ = ("values",)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TorusPoint):
            return NotImplemented
        return self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __lt__(self, other: TorusPoint) -> bool:
        return self.values < other.values

    def pairing(self, coords: Sequence[int]) -> Fraction:
        """
        lambda(p) in Q/Z for an element with the given lift.
        """
        return _mod_one(sum((c * v for c, v in zip(coords, self.values)), Fraction(0)))

    @classmethod
    def from_numerators(cls, numerators: Sequence[int], denominator: int) -> TorusPoint:
        point = cls.__new__(cls)
        point.values = tuple(Fraction(a % denominator, denominator) for a in numerators)
        return point

    def kills(self, element: GroupElement) -> bool:
        return self.pairing(element.coords) == 0

    def render(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"

    def to_strings(self) -> list[str]:
        return [str(v) for v in self.values]


class PointRecord(NamedTuple):
    point: TorusPoint
    x_p: int


def _basis_solutions(r: Representation, basis: int) -> tuple[int, list[tuple[int, ...]]]:
    # [B | Q] is square and nonsingular; with U N V = D the solutions of
    # N^T p = 0 mod 1 are p = U^T w for w_j in (1/d_j) Z. Every p is kept
    # as numerators over the lcm of the d_j.
    n = r.group.dimension
    result = snf(r.matrix().select_columns([*subsets.members(basis), *range(r.size, r.size + len(r.group.torsion))]))
    denominator = math.lcm(1, *result.d)
    u_t = result.u.transpose()
    solutions: list[tuple[int, ...]] = [(0,) * n]
    for j, d in enumerate(result.d):
        if d == 1:
            continue
        step = [u_t[i, j] * (denominator // d) % denominator for i in range(n)]
        solutions = [
            tuple((a + k * s) % denominator for a, s in zip(p, step)) for p in solutions for k in range(d)
        ]
    return denominator, solutions


def _solve_bases(r: Representation, workers: int) -> dict[int, tuple[int, list[tuple[int, ...]]]]:
    free = r.matrix().select_rows(range(r.group.free_rank)).select_columns(range(r.size))
    if rank(free) != r.group.free_rank:
        raise RankDeficiencyError(f"the list has rank {rank(free)} in a group of free rank {r.group.free_rank}")
    every = bases(from_representation(r))
    solve = functools.partial(_basis_solutions, r)
    if workers > 1 and len(every) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            solved = list(executor.map(solve, every))
    else:
        solved = [solve(b) for b in every]
    return dict(zip(every, solved))


def points_per_basis(r: Representation, workers: int = 1) -> dict[int, list[TorusPoint]]:
    """
    The m(B) points killed by each basis B, before deduplication.

    Raises:
        RankDeficiencyError: If X doesn't span the free part of G.
    """
    return {
        basis: [TorusPoint.from_numerators(p, denominator) for p in solutions]
        for basis, (denominator, solutions) in _solve_bases(r, workers).items()
    }


def enumerate_points(r: Representation, workers: int = 1) -> list[PointRecord]:
    """
    C_0(X): every point where some basis vanishes, each with X_p, the
    elements of X vanishing there. Sorted by coordinates.

    Raises:
        RankDeficiencyError: If X doesn't span the free part of G.
    """
    solved = _solve_bases(r, workers)
    common = math.lcm(1, *(denominator for denominator, _ in solved.values()))
    unique: set[tuple[int, ...]] = set()
    for denominator, solutions in solved.values():
        scale = common // denominator
        if scale == 1:
            unique.update(solutions)
        else:
            unique.update(tuple(a * scale for a in p) for p in solutions)

    lifts = [e.coords for e in r.elements]
    records = []
    # numerators over one common denominator sort the same way as the points
    for p in sorted(unique):
        x_p = 0
        for i, coords in enumerate(lifts):
            if sum(c * a for c, a in zip(coords, p)) % common == 0:
                x_p |= 1 << i
        records.append(PointRecord(TorusPoint.from_numerators(p, common), x_p))
    return records


class CountDiscrepancy(NamedTuple):
    sublist: int
    points: int
    multiplicity: int


class ComponentReport(NamedTuple):
    passed: bool
    discrepancies: list[CountDiscrepancy]


def verify_component_counts(r: Representation, records: Sequence[PointRecord] | None = None) -> ComponentReport:
    """
    For every maximal rank A, the number of points with A in X_p is m(A).
    """
    m = from_representation(r)
    records = enumerate_points(r) if records is None else records
    total = m.total_rank
    grouped = Counter(record.x_p for record in records)
    discrepancies = []
    for a in range(1 << m.size):
        if m.rank(a) != total:
            continue
        count = sum(n for x_p, n in grouped.items() if subsets.is_subset(a, x_p))
        if count != m.multiplicity(a):
            discrepancies.append(CountDiscrepancy(a, count, m.multiplicity(a)))
    return ComponentReport(passed=not discrepancies, discrepancies=discrepancies)


class AesReport(NamedTuple):
    passed: bool
    lhs: UniPoly
    rhs: UniPoly


def local_tutte(m: ArithmeticMatroid, record: PointRecord) -> BiPoly:
    return classical_tutte(restrict(m, record.x_p))


def verify_aes(r: Representation, records: Sequence[PointRecord] | None = None) -> AesReport:
    """
    M(1, y) against the sum over points p of T_{X_p}(1, y).
    """
    m = from_representation(r)
    records = enumerate_points(r) if records is None else records
    lhs = arithmetic_tutte_subsetsum(m).at_x(1)
    rhs = UniPoly()
    for x_p, count in sorted(Counter(record.x_p for record in records).items()):
        rhs = rhs + classical_tutte(restrict(m, x_p)).at_x(1) * count
    return AesReport(passed=lhs == rhs, lhs=lhs, rhs=rhs)
