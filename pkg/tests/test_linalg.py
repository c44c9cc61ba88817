from __future__ import annotations

import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form

from arithmat.linalg import IntMatrix, gcd_maximal_minors, rank, same_lattice, saturate, snf


@st.composite
def matrices(draw: st.DrawFn, max_rows: int = 4, max_cols: int = 5) -> IntMatrix:
    rows = draw(st.integers(min_value=0, max_value=max_rows))
    cols = draw(st.integers(min_value=0, max_value=max_cols))
    entries = draw(st.lists(st.integers(min_value=-9, max_value=9), min_size=rows * cols, max_size=rows * cols))
    return IntMatrix(rows, cols, entries)


@st.composite
def unimodular(draw: st.DrawFn, n: int) -> IntMatrix:
    """
    A random n x n integer matrix of determinant +-1, built from row
    additions and sign flips applied to the identity.
    """
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 0:
        return IntMatrix.from_rows(rows, cols=0)
    for _ in range(draw(st.integers(min_value=0, max_value=6))):
        i = draw(st.integers(min_value=0, max_value=n - 1))
        j = draw(st.integers(min_value=0, max_value=n - 1))
        k = draw(st.integers(min_value=-3, max_value=3))
        if i == j:
            rows[i] = [-a for a in rows[i]]
        else:
            rows[i] = [a + k * b for a, b in zip(rows[i], rows[j])]
    return IntMatrix.from_rows(rows, cols=n)


def to_sympy(m: IntMatrix) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols, list(m.entries))


def test_matrix_rejects_wrong_entry_count() -> None:
    with pytest.raises(ValueError, match="needs 6 entries"):
        IntMatrix(2, 3, [1, 2, 3])


def test_from_rows_and_columns_agree() -> None:
    by_rows = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    by_cols = IntMatrix.from_columns([[1, 4], [2, 5], [3, 6]], rows=2)

    assert by_rows == by_cols
    assert by_rows.transpose() == IntMatrix.from_rows([[1, 4], [2, 5], [3, 6]])


def test_empty_matrices_keep_their_shape() -> None:
    m = IntMatrix.from_columns([], rows=3)

    assert m.shape == (3, 0)
    assert m.is_zero()
    assert rank(m) == 0
    assert gcd_maximal_minors(m) == 1


def test_hstack_builds_the_relation_block() -> None:
    a = IntMatrix.from_rows([[1, 0], [2, 3]])
    q = IntMatrix.from_columns([[0, 6]], rows=2)

    assert a.hstack(q) == IntMatrix.from_rows([[1, 0, 0], [2, 3, 6]])


@pytest.mark.parametrize(
    ("rows", "expected"),
    [
        ([[2, 0], [0, 3]], 6),
        ([[1, 2], [2, 4]], 0),
        ([[0, 1], [1, 0]], -1),
        ([[2, 1, 0], [1, 2, 1], [0, 1, 2]], 4),
        ([[0, 0, 1], [0, 1, 0], [1, 0, 0]], -1),
    ],
)
def test_determinant(rows: list[list[int]], expected: int) -> None:
    assert IntMatrix.from_rows(rows).determinant() == expected


def test_determinant_of_non_square_raises() -> None:
    with pytest.raises(ValueError, match="square"):
        IntMatrix.zeros(2, 3).determinant()


@pytest.mark.parametrize(
    ("rows", "expected"),
    [
        ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], (2, 6, 12)),
        ([[1, 2], [3, 4]], (1, 2)),
        ([[2, 0], [0, 3]], (1, 6)),
        ([[6, 0, 0], [0, 4, 0]], (2, 12)),
        ([[0, 0], [0, 0]], (0, 0)),
    ],
)
def test_snf_diagonal(rows: list[list[int]], expected: tuple[int, ...]) -> None:
    assert snf(IntMatrix.from_rows(rows)).d == expected


@pytest.mark.parametrize(
    ("rows", "expected"),
    [
        ([[1, 2], [2, 4]], 1),
        ([[1, 0, 1], [0, 1, 1]], 2),
        ([[0, 0], [0, 0]], 0),
        ([[3]], 1),
    ],
)
def test_rank(rows: list[list[int]], expected: int) -> None:
    assert rank(IntMatrix.from_rows(rows)) == expected


@pytest.mark.parametrize(
    ("columns", "expected"),
    [
        ([[1, 1], [-1, 1]], 2),
        ([[2, 4]], 2),
        ([[1, 0], [0, 1]], 1),
        ([[2, 0], [0, 2], [1, 1]], 2),
    ],
)
def test_gcd_maximal_minors(columns: list[list[int]], expected: int) -> None:
    assert gcd_maximal_minors(IntMatrix.from_columns(columns, rows=2)) == expected


def test_saturate_single_vector() -> None:
    sat = saturate(IntMatrix.from_columns([[2, 4]], rows=2))

    assert sat.shape == (2, 1)
    assert set(sat.column(0)) in ({1, 2}, {-1, -2})


def test_saturation_is_primitive_and_contains_the_original() -> None:
    m = IntMatrix.from_columns([[2, 0, 2], [0, 2, 2], [2, 2, 4]], rows=3)
    sat = saturate(m)

    assert sat.cols == rank(m) == 2
    assert gcd_maximal_minors(sat) == 1
    assert rank(sat.hstack(m)) == 2


def test_same_lattice() -> None:
    a = IntMatrix.from_columns([[1, 0], [0, 1]], rows=2)
    b = IntMatrix.from_columns([[1, 1], [1, 2]], rows=2)
    c = IntMatrix.from_columns([[1, 1], [-1, 1]], rows=2)

    assert same_lattice(a, b)
    assert not same_lattice(a, c)
    assert not same_lattice(a, IntMatrix.from_columns([[1, 0, 0]], rows=3))


@settings(deadline=None, max_examples=200)
@given(matrices())
def test_snf_transforms_diagonalize(m: IntMatrix) -> None:
    result = snf(m)

    assert result.u @ m @ result.v == IntMatrix.diagonal(result.d, m.rows, m.cols)
    assert result.u @ result.u_inv == IntMatrix.identity(m.rows)
    assert abs(result.u.determinant()) == 1
    assert abs(result.v.determinant()) == 1


@settings(deadline=None, max_examples=200)
@given(matrices())
def test_snf_is_a_divisibility_chain(m: IntMatrix) -> None:
    d = snf(m).nonzero

    assert all(x > 0 for x in d)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert all(x == 0 for x in snf(m).d[len(d) :])


@settings(deadline=None, max_examples=100)
@given(matrices())
def test_snf_matches_sympy(m: IntMatrix) -> None:
    if m.rows == 0 or m.cols == 0 or m.is_zero():
        return
    ours = snf(m).nonzero
    theirs = smith_normal_form(to_sympy(m), domain=sympy.ZZ)
    expected = tuple(abs(int(theirs[i, i])) for i in range(min(m.shape)) if theirs[i, i] != 0)

    assert ours == expected


@settings(deadline=None, max_examples=100)
@given(matrices(max_rows=3, max_cols=4))
def test_gcd_of_minors_matches_brute_force(m: IntMatrix) -> None:
    r = rank(m)

    assert r == to_sympy(m).rank()
    if r == 0:
        assert gcd_maximal_minors(m) == 1
    else:
        assert gcd_maximal_minors(m) == math.gcd(*m.minors(r))


@settings(deadline=None, max_examples=100)
@given(matrices(max_rows=4, max_cols=4))
def test_determinant_matches_sympy(m: IntMatrix) -> None:
    if m.rows != m.cols:
        return
    assert m.determinant() == to_sympy(m).det()


@settings(deadline=None, max_examples=200)
@given(matrices(), st.data())
def test_gcd_of_minors_is_unchanged_by_unimodular_factors(m: IntMatrix, data: st.DataObject) -> None:
    u = data.draw(unimodular(m.rows))
    v = data.draw(unimodular(m.cols))

    assert abs(u.determinant()) == abs(v.determinant()) == 1
    assert gcd_maximal_minors(u @ m @ v) == gcd_maximal_minors(m)
    assert gcd_maximal_minors(m @ v) == gcd_maximal_minors(m)
    assert rank(u @ m @ v) == rank(m)


@settings(deadline=None, max_examples=200)
@given(matrices())
def test_saturate_is_idempotent(m: IntMatrix) -> None:
    sat = saturate(m)

    assert sat.cols == rank(m)
    assert gcd_maximal_minors(sat) == 1
    assert same_lattice(saturate(sat), sat)
