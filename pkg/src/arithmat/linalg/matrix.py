"""
Dense, immutable integer matrices.

Entries are Python ints so nothing here ever rounds.

Created: 18/10/2026
"""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence


class IntMatrix:
    def __init__(self, rows: int, cols: int, entries: Sequence[int]) -> None:
        """
        An exact integer matrix stored row-major.

        Args:
            rows (int): Number of rows.
            cols (int): Number of columns.
            entries (Sequence[int]): rows * cols integers, row by row.

        Raises:
            ValueError: If the entry count doesn't match the shape.
        """
        if rows < 0 or cols < 0:
            raise ValueError(f"matrix shape must be nonnegative, got {rows}x{cols}")
        if len(entries) != rows * cols:
            raise ValueError(f"a {rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self._entries: tuple[int, ...] = tuple(int(e) for e in entries)

    def __repr__(self) -> str:
        return self.__class__.__qualname__ + f"(rows={self.rows}, cols={self.cols}, entries={self._entries!r})"

    __slots__ = ("_entries", "cols", "rows")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        """
        Build a matrix from a list of rows. `cols` is only needed
        when there are no rows to infer it from.
        """
        width = len(rows[0]) if rows else (cols or 0)
        if any(len(row) != width for row in rows):
            raise ValueError("all rows must have the same length")
        return cls(len(rows), width, [e for row in rows for e in row])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        """
        Build a matrix whose columns are the given vectors, each of
        length `rows`. An empty list gives a rows x 0 matrix.
        """
        if any(len(col) != rows for col in columns):
            raise ValueError(f"all columns must have length {rows}")
        return cls(rows, len(columns), [columns[j][i] for i in range(rows) for j in range(len(columns))])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
        """
        A matrix with `diag` down its main diagonal and zeros
        everywhere else, padded out to rows x cols.
        """
        r = len(diag) if rows is None else rows
        c = len(diag) if cols is None else cols
        entries = [0] * (r * c)
        for i, d in enumerate(diag):
            entries[i * c + i] = d
        return cls(r, c, entries)

    @property
    def entries(self) -> tuple[int, ...]:
        return self._entries

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {index} out of range for a {self.rows}x{self.cols} matrix")
        return self._entries[i * self.cols + j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def row(self, i: int) -> tuple[int, ...]:
        return self._entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self._entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_columns(self) -> list[list[int]]:
        return [list(self.column(j)) for j in range(self.cols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows(self.to_columns(), cols=self.rows)

    def is_zero(self) -> bool:
        return not any(self._entries)

    def hstack(self, other: IntMatrix) -> IntMatrix:
        """
        Glue `other` on to the right hand side, the [A | Q] construction.
        """
        if other.rows != self.rows:
            raise ValueError(f"cannot stack a {self.shape} matrix with a {other.shape} one")
        return IntMatrix.from_columns(self.to_columns() + other.to_columns(), rows=self.rows)

    def select_columns(self, indices: Sequence[int]) -> IntMatrix:
        return IntMatrix.from_columns([self.column(j) for j in indices], rows=self.rows)

    def select_rows(self, indices: Sequence[int]) -> IntMatrix:
        return IntMatrix.from_rows([self.row(i) for i in indices], cols=self.cols)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply a {self.shape} matrix by a {other.shape} one")
        other_cols = other.to_columns()
        return IntMatrix(
            self.rows,
            other.cols,
            [sum(a * b for a, b in zip(self.row(i), col)) for i in range(self.rows) for col in other_cols],
        )

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """
        Matrix-vector product.
        """
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} does not fit a {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(self.row(i), vector)) for i in range(self.rows))

    def determinant(self) -> int:
        """
        Exact determinant by fraction-free (Bareiss) elimination.

        Raises:
            ValueError: If the matrix isn't square.
        """
        if self.rows != self.cols:
            raise ValueError(f"determinant needs a square matrix, got {self.shape}")
        n = self.rows
        if n == 0:
            return 1
        work = self.to_rows()
        sign = 1
        previous = 1
        for k in range(n - 1):
            if work[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if work[i][k] != 0), None)
                if swap is None:
                    return 0
                work[k], work[swap] = work[swap], work[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) // previous
            previous = work[k][k]
        return sign * work[n - 1][n - 1]

    def minors(self, order: int) -> Iterator[int]:
        """
        Every minor of the given order, by brute force.

        Only meant for small matrices and for cross-checking
        the normal form route.
        """
        for rows in itertools.combinations(range(self.rows), order):
            sub = self.select_rows(rows)
            for cols in itertools.combinations(range(self.cols), order):
                yield sub.select_columns(cols).determinant()
