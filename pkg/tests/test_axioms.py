from __future__ import annotations

import pytest
from hypothesis import given, settings

from arithmat.exceptions import CapExceededError
from arithmat.matroid import ArithmeticMatroid, Axiom, Witness, check_axioms, contract, delete, dual
from arithmat.representation import Representation, from_representation
from tests.helpers import load_matroid
from tests.strategies import representations


def test_realizable_matroids_pass(
    m_torsion: ArithmeticMatroid, m_unsaturated: ArithmeticMatroid, m_triangle: ArithmeticMatroid
) -> None:
    for m in (m_torsion, m_unsaturated, m_triangle):
        report = check_axioms(m)
        assert report.passed, report
        assert report.failed == []


@pytest.mark.parametrize("name", ["fano", "not_gcd"])
def test_explicit_tables_that_pass(name: str) -> None:
    report = check_axioms(load_matroid(name))

    assert report.passed
    assert report.rank_axioms_hold


@pytest.mark.parametrize(
    ("name", "axiom"),
    [
        ("breaks_axiom_1", Axiom.DEPENDENT_DIVIDES),
        ("breaks_axiom_2", Axiom.INDEPENDENT_DIVIDES),
        ("breaks_axiom_3", Axiom.PRODUCT),
        ("breaks_axiom_4", Axiom.MU),
        ("breaks_axiom_5", Axiom.MU_STAR),
    ],
)
def test_each_axiom_is_independent_of_the_others(name: str, axiom: Axiom) -> None:
    m = load_matroid(name)
    report = check_axioms(m)

    assert report.failed == [axiom]
    assert report.rank_axioms_hold
    assert report[axiom].violations >= 1
    assert all(w.replay(m) for w in report[axiom].witnesses)


def test_product_axiom_witness() -> None:
    m = load_matroid("breaks_axiom_3")
    report = check_axioms(m)

    assert report[Axiom.PRODUCT].witnesses == [Witness(Axiom.PRODUCT, a=0, b=0b11, f=0b01, t=0b10)]


def test_mu_axiom_witness() -> None:
    m = load_matroid("breaks_axiom_4")
    report = check_axioms(m)

    assert Witness(Axiom.MU, a=0, b=0b1111) in report[Axiom.MU].witnesses


def test_witness_limit_caps_the_list_not_the_count() -> None:
    m = load_matroid("breaks_axiom_4")
    report = check_axioms(m, witness_limit=0)

    assert report[Axiom.MU].witnesses == []
    assert report[Axiom.MU].violations >= 1


def test_broken_rank_function() -> None:
    # rk({0}) = 2 > |{0}|, and rk drops from {0} to {0, 1}
    m = ArithmeticMatroid.from_tables(2, [0, 2, 1, 1], [1, 1, 1, 1])
    report = check_axioms(m)

    assert not report.rank_axioms_hold
    assert Axiom.RANK_BOUNDS in report.failed
    assert Axiom.RANK_MONOTONE in report.failed


def test_nonpositive_multiplicity() -> None:
    m = ArithmeticMatroid.from_tables(1, [0, 1], [1, 0])
    report = check_axioms(m)

    assert Axiom.POSITIVE in report.failed
    assert report[Axiom.POSITIVE].witnesses == [Witness(Axiom.POSITIVE, a=1)]


def test_cap_applies_to_oracles_only(skew_frame: Representation) -> None:
    m = from_representation(skew_frame)

    with pytest.raises(CapExceededError, match="check-axioms needs ground size <= 3, got 4"):
        check_axioms(m, cap=3)

    assert check_axioms(m.to_tables(), cap=3).passed


def test_axiom_descriptions_are_filled_in() -> None:
    assert all(axiom.description for axiom in Axiom)
    assert Axiom("3") is Axiom.PRODUCT


@settings(deadline=None, max_examples=200)
@given(representations(max_size=6))
def test_representable_matroids_satisfy_every_axiom(rep: Representation) -> None:
    m = from_representation(rep)

    assert check_axioms(m).passed
    assert check_axioms(dual(m)).passed


@settings(deadline=None, max_examples=60)
@given(representations(min_size=1, max_size=5))
def test_deletions_and_contractions_satisfy_every_axiom(rep: Representation) -> None:
    m = from_representation(rep)

    for v in range(m.size):
        assert check_axioms(delete(m, v)).passed
        assert check_axioms(contract(m, v)).passed
