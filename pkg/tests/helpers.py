"""
Shared helpers for the test suite: fixture loading and an
independent (sympy) route to golden polynomials.
"""

from __future__ import annotations

from pathlib import Path

import sympy

from arithmat.matroid import ArithmeticMatroid
from arithmat.representation import Representation
from arithmat.schema import ExplicitInput, RepresentationInput, parse_input
from arithmat.tutte import BiPoly, UniPoly

FIXTURES = Path(__file__).parent.joinpath("fixtures").resolve()

_X, _Y, _Q = sympy.symbols("x y q")


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.json"


def load_description(name: str) -> RepresentationInput | ExplicitInput:
    return parse_input(fixture_path(name).read_bytes())


def load_representation(name: str) -> Representation:
    description = load_description(name)
    assert isinstance(description, RepresentationInput)
    return description.to_representation()


def load_matroid(name: str) -> ArithmeticMatroid:
    return load_description(name).to_matroid()


def poly(expression: str) -> BiPoly:
    """
    Expand a (possibly factored) expression in x and y.
    """
    expanded = sympy.Poly(sympy.expand(sympy.sympify(expression)), _X, _Y)
    return BiPoly({(int(i), int(j)): int(c) for (i, j), c in expanded.terms()})


def unipoly(expression: str) -> UniPoly:
    """
    Expand an expression in q.
    """
    expanded = sympy.Poly(sympy.expand(sympy.sympify(expression)), _Q)
    return UniPoly([int(c) for c in reversed(expanded.all_coeffs())])


def by_name(m: ArithmeticMatroid, names: str) -> int:
    """
    Bitmask of a sublist written as a string of single letter labels, e.g. "abd".
    """
    mask = 0
    for name in names:
        mask |= 1 << m.ground.index(name)
    return mask
