from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arithmat.exceptions import CapExceededError, InvalidGroundSetError, InvalidGroupError
from arithmat.group import FgGroup, GroupElement
from arithmat.matroid import Backing, dual
from arithmat.representation import (
    Representation,
    from_representation,
    gale_dual,
    is_gcd,
    is_torsion_free,
    maximal_independent,
    verify_dual_iso,
)
from tests.helpers import load_matroid
from tests.strategies import representations


def test_elements_are_reduced_into_the_group() -> None:
    r = Representation(FgGroup(1, (6,)), [[1, 7], [0, -1]])

    assert [e.coords for e in r.elements] == [(1, 1), (0, 5)]
    assert r.size == 2
    assert r.labels is None


def test_wrong_length_element() -> None:
    with pytest.raises(InvalidGroupError):
        Representation(FgGroup(2), [[1, 2, 3]])


def test_bad_labels() -> None:
    with pytest.raises(InvalidGroundSetError):
        Representation(FgGroup(1), [[1], [2]], labels=["a"])


def test_full_rank_lists_keep_their_group(torsion: Representation) -> None:
    assert torsion.group == FgGroup(2, (6,))
    assert torsion.labels == ("a", "b", "c", "d")


def test_rank_deficient_lists_are_saturated(unsaturated: Representation) -> None:
    assert unsaturated.group == FgGroup(2)
    assert all(len(e) == 2 for e in unsaturated.elements)


def test_saturation_keeps_the_matroid() -> None:
    g = FgGroup(2)
    r = Representation(g, [[2, 4]])
    m = from_representation(r)

    assert r.group == FgGroup(1)
    assert m.rank(1) == 1
    assert m.multiplicity(1) == 2
    assert m.multiplicity(0) == 1


def test_matrix_is_elements_then_relations(torsion: Representation) -> None:
    matrix = torsion.matrix()

    assert matrix.shape == (3, 5)
    assert matrix.column(0) == (1, 2, 0)
    assert matrix.column(4) == (0, 0, 6)


def test_from_representation_is_oracle_backed(index_two: Representation) -> None:
    m = from_representation(index_two)

    assert m.backing is Backing.REPRESENTATION
    assert m.multiplicity(m.full) == 2
    assert m.multiplicity(0b01) == 1
    assert m.total_rank == 2


@pytest.mark.parametrize("name", ["index_two", "torsion", "unsaturated", "triangle", "skew_frame"])
def test_gale_dual_represents_the_dual(name: str, request: pytest.FixtureRequest) -> None:
    r = request.getfixturevalue(name)
    report = verify_dual_iso(r)

    assert report.passed
    assert report.discrepancies == []
    assert gale_dual(r).labels == r.labels


def test_gale_dual_of_a_torsion_list(torsion: Representation) -> None:
    d = gale_dual(torsion)
    m = from_representation(d)

    assert m.total_rank == 2
    assert m.multiplicity(0) == 4
    assert m.multiplicity(m.full) == 6


def test_double_dual_matches_oracles(torsion: Representation) -> None:
    twice = gale_dual(gale_dual(torsion))

    assert from_representation(twice).same_oracles(from_representation(torsion))


def test_verify_dual_iso_respects_the_cap(skew_frame: Representation) -> None:
    with pytest.raises(CapExceededError, match="gale-dual verification"):
        verify_dual_iso(skew_frame, cap=3)


def test_torsion_free(torsion: Representation, unsaturated: Representation) -> None:
    assert not is_torsion_free(from_representation(torsion))
    assert is_torsion_free(from_representation(unsaturated))


def test_maximal_independent(triangle: Representation) -> None:
    m = from_representation(triangle)

    assert sorted(maximal_independent(m, m.full)) == [0b011, 0b101, 0b110]
    assert maximal_independent(m, 0) == [0]


def test_gcd_property() -> None:
    assert not is_gcd(load_matroid("not_gcd"))
    assert is_gcd(load_matroid("fano"))


@pytest.mark.parametrize("name", ["index_two", "unsaturated", "triangle", "skew_frame"])
def test_lattice_lists_are_gcd(name: str, request: pytest.FixtureRequest) -> None:
    assert is_gcd(from_representation(request.getfixturevalue(name)))


@settings(deadline=None, max_examples=200)
@given(representations(max_size=6))
def test_gale_dual_is_isomorphic_to_the_dual(rep: Representation) -> None:
    assert verify_dual_iso(rep).passed


@settings(deadline=None, max_examples=100)
@given(representations(max_size=5))
def test_gale_double_dual(rep: Representation) -> None:
    twice = from_representation(gale_dual(gale_dual(rep)))

    assert twice.same_oracles(from_representation(rep))
    assert dual(dual(from_representation(rep))).same_oracles(twice)


@settings(deadline=None, max_examples=100)
@given(representations(max_size=6, free_only=True))
def test_free_lists_are_gcd(rep: Representation) -> None:
    assert is_gcd(from_representation(rep))


@settings(deadline=None, max_examples=100)
@given(representations(max_size=5), st.data())
def test_oracles_ignore_the_torsion_lifts(rep: Representation, data: st.DataObject) -> None:
    r = rep.group.free_rank
    shift = st.integers(min_value=-3, max_value=3)
    shifted = Representation(rep.group, rep.elements, labels=rep.labels)
    torsion = rep.group.torsion
    shifted.elements = tuple(
        GroupElement([*e.free_part(r), *(c + d * data.draw(shift) for c, d in zip(e.torsion_part(r), torsion))])
        for e in rep.elements
    )

    assert from_representation(shifted).same_oracles(from_representation(rep))
    assert from_representation(gale_dual(shifted)).same_oracles(from_representation(gale_dual(rep)))
