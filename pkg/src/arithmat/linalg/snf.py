"""
Smith normal form and everything that falls out of it: rank,
the GCD of maximal minors and lattice saturation.

Created: 18/10/2026
"""

from __future__ import annotations

import math
from typing import NamedTuple

from arithmat.linalg.matrix import IntMatrix


class SnfResult(NamedTuple):
    """
    u @ m @ v is diagonal with `d` down the diagonal.

    `u_inv` is the inverse of `u`, kept because its columns give
    a basis adapted to the column lattice of m.
    """

    d: tuple[int, ...]
    u: IntMatrix
    v: IntMatrix
    u_inv: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for x in self.d if x != 0)

    @property
    def nonzero(self) -> tuple[int, ...]:
        return tuple(x for x in self.d if x != 0)


class _Elimination:
    """
    Mutable working state for a single normal form computation.

    Every row operation on `a` is mirrored on `u` and inverted on
    the columns of `u_inv`; every column operation is mirrored on `v`.
    """

    __slots__ = ("a", "cols", "rows", "u", "u_inv", "v")

    def __init__(self, m: IntMatrix) -> None:
        self.rows = m.rows
        self.cols = m.cols
        self.a = m.to_rows()
        self.u = IntMatrix.identity(m.rows).to_rows()
        self.u_inv = IntMatrix.identity(m.rows).to_rows()
        self.v = IntMatrix.identity(m.cols).to_rows()

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        self.a[i], self.a[j] = self.a[j], self.a[i]
        self.u[i], self.u[j] = self.u[j], self.u[i]
        for row in self.u_inv:
            row[i], row[j] = row[j], row[i]

    def add_row(self, target: int, source: int, k: int) -> None:
        # row_target += k * row_source
        for row in (self.a, self.u):
            src = row[source]
            dst = row[target]
            for c in range(len(dst)):
                dst[c] += k * src[c]
        for row in self.u_inv:
            row[source] -= k * row[target]

    def negate_row(self, i: int) -> None:
        self.a[i] = [-x for x in self.a[i]]
        self.u[i] = [-x for x in self.u[i]]
        for row in self.u_inv:
            row[i] = -row[i]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for matrix in (self.a, self.v):
            for row in matrix:
                row[i], row[j] = row[j], row[i]

    def add_col(self, target: int, source: int, k: int) -> None:
        for matrix in (self.a, self.v):
            for row in matrix:
                row[target] += k * row[source]

    def smallest(self, t: int) -> tuple[int, int] | None:
        """
        Position of the smallest nonzero entry in the lower right block.
        """
        best: tuple[int, int] | None = None
        for i in range(t, self.rows):
            for j in range(t, self.cols):
                x = self.a[i][j]
                if x and (best is None or abs(x) < abs(self.a[best[0]][best[1]])):
                    best = (i, j)
        return best

    def clear_cross(self, t: int) -> bool:
        """
        Reduce column t and row t modulo the pivot.

        Returns True when both are zero apart from the pivot.
        """
        pivot = self.a[t][t]
        clean = True
        for i in range(t + 1, self.rows):
            q = self.a[i][t] // pivot
            if q:
                self.add_row(i, t, -q)
            if self.a[i][t]:
                clean = False
        for j in range(t + 1, self.cols):
            q = self.a[t][j] // pivot
            if q:
                self.add_col(j, t, -q)
            if self.a[t][j]:
                clean = False
        return clean

    def promote_remainder(self, t: int) -> None:
        """
        Move the smallest leftover in row t or column t into the pivot.
        """
        candidates = [(abs(self.a[i][t]), 0, i) for i in range(t + 1, self.rows) if self.a[i][t]]
        candidates += [(abs(self.a[t][j]), 1, j) for j in range(t + 1, self.cols) if self.a[t][j]]
        _, axis, index = min(candidates)
        if axis == 0:
            self.swap_rows(t, index)
        else:
            self.swap_cols(t, index)

    def indivisible(self, t: int) -> int | None:
        """
        A row below t holding an entry the pivot doesn't divide.
        """
        pivot = self.a[t][t]
        for i in range(t + 1, self.rows):
            for j in range(t + 1, self.cols):
                if self.a[i][j] % pivot:
                    return i
        return None

    def run(self) -> SnfResult:
        t = 0
        while t < min(self.rows, self.cols):
            position = self.smallest(t)
            if position is None:
                break
            self.swap_rows(t, position[0])
            self.swap_cols(t, position[1])
            while True:
                if not self.clear_cross(t):
                    self.promote_remainder(t)
                    continue
                offender = self.indivisible(t)
                if offender is None:
                    break
                self.add_row(t, offender, 1)
            if self.a[t][t] < 0:
                self.negate_row(t)
            t += 1

        diag = tuple(self.a[i][i] for i in range(min(self.rows, self.cols)))
        return SnfResult(
            d=diag,
            u=IntMatrix.from_rows(self.u, cols=self.rows),
            v=IntMatrix.from_rows(self.v, cols=self.cols),
            u_inv=IntMatrix.from_rows(self.u_inv, cols=self.rows),
        )


def snf(m: IntMatrix) -> SnfResult:
    """
    Smith normal form of `m` with its unimodular transforms.

    Pivots on the smallest nonzero entry, reduces row and column by
    floor division and repairs divisibility by folding an offending
    row into the pivot row, so each d_i divides d_{i+1}.

    Args:
        m (IntMatrix): Any integer matrix, empty ones included.

    Returns:
        SnfResult: d, u, v (and u's inverse) with u @ m @ v = diag(d).
    """
    return _Elimination(m).run()


def rank(m: IntMatrix) -> int:
    """
    Rank of `m` over the rationals.
    """
    if m.is_zero():
        return 0
    return snf(m).rank


def gcd_maximal_minors(m: IntMatrix) -> int:
    """
    GCD of all minors of order rank(m).

    This is the index of the column lattice of `m` inside its
    saturation. The zero (or empty) matrix gives 1, the empty product.
    """
    if m.is_zero():
        return 1
    return math.prod(snf(m).nonzero)


def saturate(m: IntMatrix) -> IntMatrix:
    """
    A basis of the saturation of the column span of `m`, as columns.

    The saturation is the largest sublattice of Z^rows in which the
    column span has finite index. The result has rank(m) columns.
    """
    result = snf(m)
    return result.u_inv.select_columns(range(result.rank))


def same_lattice(a: IntMatrix, b: IntMatrix) -> bool:
    """
    Whether the columns of `a` and `b` span the same lattice.
    """
    if a.rows != b.rows:
        return False
    both = a.hstack(b)
    r = rank(both)
    if rank(a) != r or rank(b) != r:
        return False
    index = gcd_maximal_minors(both)
    return gcd_maximal_minors(a) == index == gcd_maximal_minors(b)
