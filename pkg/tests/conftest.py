from __future__ import annotations

import pytest

from arithmat.matroid import ArithmeticMatroid
from arithmat.representation import Representation, from_representation
from tests.helpers import load_matroid, load_representation


@pytest.fixture
def index_two() -> Representation:
    """
    Two vectors spanning an index 2 sublattice of Z^2.
    """
    return load_representation("index_two")


@pytest.fixture
def torsion() -> Representation:
    """
    Four elements of Z^2 + Z/6, two of them torsion.
    """
    return load_representation("torsion")


@pytest.fixture
def unsaturated() -> Representation:
    """
    Four vectors of Z^3 of rank 2, so the ambient group gets saturated.
    """
    return load_representation("unsaturated")


@pytest.fixture
def triangle() -> Representation:
    return load_representation("triangle")


@pytest.fixture
def skew_frame() -> Representation:
    return load_representation("skew_frame")


@pytest.fixture
def m_torsion(torsion: Representation) -> ArithmeticMatroid:
    return from_representation(torsion)


@pytest.fixture
def m_unsaturated(unsaturated: Representation) -> ArithmeticMatroid:
    return from_representation(unsaturated)


@pytest.fixture
def m_triangle(triangle: Representation) -> ArithmeticMatroid:
    return from_representation(triangle)


@pytest.fixture
def fano() -> ArithmeticMatroid:
    """
    The Fano rank function with every multiplicity 1.
    """
    return load_matroid("fano")
