from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from arithmat.matroid import subsets
from arithmat.representation import Representation, from_representation
from arithmat.toric import (
    TorusPoint,
    enumerate_points,
    local_tutte,
    points_per_basis,
    verify_aes,
    verify_component_counts,
)
from arithmat.tutte import UniPoly
from tests.helpers import poly
from tests.strategies import representations


def test_torus_points_live_in_the_unit_interval() -> None:
    p = TorusPoint([Fraction(-1, 2), 3, Fraction(7, 3)])

    assert p.values == (Fraction(1, 2), Fraction(0), Fraction(1, 3))
    assert p.render() == "(1/2, 0, 1/3)"
    assert p.to_strings() == ["1/2", "0", "1/3"]
    assert p == TorusPoint([Fraction(1, 2), 0, Fraction(-2, 3)])


def test_pairing() -> None:
    p = TorusPoint([Fraction(1, 3), Fraction(2, 3)])

    assert p.pairing([2, -1]) == 0
    assert p.pairing([1, 0]) == Fraction(1, 3)
    assert p.pairing([-1, 0]) == Fraction(2, 3)


def test_from_numerators() -> None:
    p = TorusPoint.from_numerators([-2, 9, 6], 6)

    assert p == TorusPoint([Fraction(2, 3), Fraction(1, 2), 0])
    assert p.values == (Fraction(2, 3), Fraction(1, 2), Fraction(0))


def test_points_are_sorted() -> None:
    assert sorted([TorusPoint([Fraction(1, 2), 0]), TorusPoint([0, Fraction(1, 2)])]) == [
        TorusPoint([0, Fraction(1, 2)]),
        TorusPoint([Fraction(1, 2), 0]),
    ]


def test_two_vectors_of_index_two(index_two: Representation) -> None:
    records = enumerate_points(index_two)

    assert [record.point.render() for record in records] == ["(0, 0)", "(1/2, 1/2)"]
    assert all(record.x_p == 0b11 for record in records)


def test_three_vectors_in_the_plane(triangle: Representation) -> None:
    records = enumerate_points(triangle)

    assert [record.point.render() for record in records] == ["(0, 0)", "(1/3, 2/3)", "(2/3, 1/3)"]
    assert all(record.x_p == 0b111 for record in records)


def test_one_basis_of_multiplicity_five(skew_frame: Representation) -> None:
    per_basis = points_per_basis(skew_frame)

    assert list(per_basis) == [0b1111]
    assert len(per_basis[0b1111]) == 5
    assert len(enumerate_points(skew_frame)) == 5


def test_points_per_basis_count_the_multiplicity(unsaturated: Representation) -> None:
    m = from_representation(unsaturated)

    for basis, points in points_per_basis(unsaturated, workers=2).items():
        assert len(points) == len(set(points)) == m.multiplicity(basis)


def test_points_with_torsion(torsion: Representation) -> None:
    records = enumerate_points(torsion)
    by_sublist: dict[int, int] = {}
    for record in records:
        by_sublist[record.x_p] = by_sublist.get(record.x_p, 0) + 1

    assert len(records) == 24
    assert by_sublist == {0b1111: 4, 0b0111: 4, 0b1011: 8, 0b0011: 8}


@pytest.mark.parametrize("name", ["index_two", "torsion", "unsaturated", "triangle", "skew_frame"])
def test_component_counts(name: str, request: pytest.FixtureRequest) -> None:
    report = verify_component_counts(request.getfixturevalue(name))

    assert report.passed
    assert report.discrepancies == []


def test_local_tutte(triangle: Representation) -> None:
    m = from_representation(triangle)
    records = enumerate_points(triangle)

    assert local_tutte(m, records[0]) == poly("x**2 + x + y")


def test_aes_on_three_vectors(triangle: Representation) -> None:
    report = verify_aes(triangle)

    assert report.passed
    assert report.lhs == report.rhs == UniPoly([6, 3])


def test_aes_with_torsion(torsion: Representation) -> None:
    report = verify_aes(torsion)

    assert report.passed
    assert report.lhs == UniPoly([8, 12, 4])


def test_precomputed_records_are_reused(index_two: Representation) -> None:
    records = enumerate_points(index_two)

    assert verify_aes(index_two, records[:1]).passed is False
    assert verify_component_counts(index_two, records[:1]).discrepancies[0].points == 1


@settings(deadline=None, max_examples=40)
@given(representations(max_size=6))
def test_points_verify_on_random_lists(rep: Representation) -> None:
    records = enumerate_points(rep)

    assert verify_component_counts(rep, records).passed
    assert verify_aes(rep, records).passed


@settings(deadline=None, max_examples=40)
@given(representations(max_size=5, max_entry=5))
def test_vanishing_sets_match_the_pairing(rep: Representation) -> None:
    records = enumerate_points(rep)
    m = from_representation(rep)

    assert len({record.point for record in records}) == len(records)
    for record in records:
        assert record.x_p == subsets.from_members(i for i, e in enumerate(rep.elements) if record.point.kills(e))
    for basis, points in points_per_basis(rep).items():
        assert len(set(points)) == m.multiplicity(basis)
        assert all(point.kills(rep.elements[i]) for point in points for i in subsets.members(basis))
