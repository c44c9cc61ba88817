"""
Hypothesis strategies for random representations and matroids.
"""

from __future__ import annotations

from hypothesis import strategies as st

from arithmat.group import FgGroup
from arithmat.matroid import ArithmeticMatroid
from arithmat.representation import Representation, from_representation

# Invariant factor chains drawn from {2, 3, 4, 6}
TORSION_CHAINS: list[tuple[int, ...]] = [(), (), (2,), (3,), (4,), (6,), (2, 2), (2, 4), (2, 6), (3, 6)]


@st.composite
def representations(
    draw: st.DrawFn,
    max_size: int = 7,
    max_free_rank: int = 4,
    min_size: int = 0,
    free_only: bool = False,
    max_entry: int = 9,
) -> Representation:
    free_rank = draw(st.integers(min_value=0, max_value=max_free_rank))
    torsion = () if free_only else draw(st.sampled_from(TORSION_CHAINS))
    group = FgGroup(free_rank, torsion)
    size = draw(st.integers(min_value=min_size, max_value=max_size))
    entries = st.integers(min_value=-max_entry, max_value=max_entry)
    vector = st.lists(entries, min_size=group.dimension, max_size=group.dimension)
    elements = draw(st.lists(vector, min_size=size, max_size=size))
    return Representation(group, elements)


@st.composite
def trivial_matroids(draw: st.DrawFn, max_size: int = 7) -> ArithmeticMatroid:
    """
    A random realizable matroid with every multiplicity forced to 1,
    materialized as explicit tables.
    """
    free_rank = draw(st.integers(min_value=0, max_value=4))
    size = draw(st.integers(min_value=0, max_value=max_size))
    vector = st.lists(st.integers(min_value=-3, max_value=3), min_size=free_rank, max_size=free_rank)
    elements = draw(st.lists(vector, min_size=size, max_size=size))
    m = from_representation(Representation(FgGroup(free_rank), elements))
    return ArithmeticMatroid.from_tables(size, m.rank_table(), [1] * (1 << size))

