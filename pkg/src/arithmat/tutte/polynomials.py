"""
Exact integer polynomials: BiPoly in x and y for Tutte polynomials
and UniPoly in a single variable for their specializations.

Created: 18/10/2026
"""

from __future__ import annotations

import math
from collections import defaultdict
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence
    from fractions import Fraction

    Number = int | Fraction


def _render_term(coeff: int, powers: Sequence[tuple[str, int]]) -> str:
    factors = [var if exp == 1 else f"{var}^{exp}" for var, exp in powers if exp]
    magnitude = abs(coeff)
    if not factors:
        return str(magnitude)
    if magnitude == 1:
        return "*".join(factors)
    return "*".join([str(magnitude), *factors])


def _render(terms: Iterable[tuple[int, Sequence[tuple[str, int]]]]) -> str:
    out = ""
    for coeff, powers in terms:
        body = _render_term(coeff, powers)
        if not out:
            out = f"-{body}" if coeff < 0 else body
        else:
            out += f" - {body}" if coeff < 0 else f" + {body}"
    return out or "0"


class BiPoly:
    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None) -> None:
        """
        A polynomial in x and y with integer coefficients, stored as
        (i, j) -> coefficient of x^i y^j with no zero entries.
        """
        self._terms: dict[tuple[int, int], int] = {
            (int(i), int(j)): int(c) for (i, j), c in (terms or {}).items() if c
        }

    def __repr__(self) -> str:
        return self.__class__.__qualname__ + f"({self.to_text()!r})"

    __slots__ = ("_terms",)

    @classmethod
    def constant(cls, c: int) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: int, i: int, j: int) -> BiPoly:
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> BiPoly:
        return cls.monomial(1, 1, 0)

    @classmethod
    def y(cls) -> BiPoly:
        return cls.monomial(1, 0, 1)

    @classmethod
    def corank_nullity(cls, weights: Mapping[tuple[int, int], int]) -> BiPoly:
        """
        Sum of w * (x-1)^a * (y-1)^b over the (a, b) -> w entries.
        """
        terms: defaultdict[tuple[int, int], int] = defaultdict(int)
        for (a, b), w in weights.items():
            if not w:
                continue
            for i in range(a + 1):
                xc = math.comb(a, i) * (-1) ** (a - i)
                for j in range(b + 1):
                    terms[(i, j)] += w * xc * math.comb(b, j) * (-1) ** (b - j)
        return cls(terms)

    def terms(self) -> list[tuple[tuple[int, int], int]]:
        """
        ((i, j), coefficient) pairs sorted by (i, j) ascending.
        """
        return sorted(self._terms.items())

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree_x(self) -> int:
        return max((i for i, _ in self._terms), default=0)

    @property
    def degree_y(self) -> int:
        return max((j for _, j in self._terms), default=0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms()))

    def __add__(self, other: BiPoly | int) -> BiPoly:
        if isinstance(other, int):
            other = BiPoly.constant(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other: BiPoly | int) -> BiPoly:
        return self + (-other)

    def __rsub__(self, other: int) -> BiPoly:
        return (-self) + other

    def __mul__(self, other: BiPoly | int) -> BiPoly:
        if isinstance(other, int):
            return BiPoly({key: c * other for key, c in self._terms.items()})
        out: defaultdict[tuple[int, int], int] = defaultdict(int)
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                out[(i1 + i2, j1 + j2)] += c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BiPoly:
        result = BiPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def swap(self) -> BiPoly:
        """
        p(y, x).
        """
        return BiPoly({(j, i): c for (i, j), c in self._terms.items()})

    def evaluate(self, x: Number, y: Number) -> Number:
        return sum((c * x**i * y**j for (i, j), c in self._terms.items()), 0)

    def substitute(self, x: UniPoly, y: UniPoly) -> UniPoly:
        """
        Compose with univariate polynomials, p(x(q), y(q)).
        """
        total = UniPoly()
        for (i, j), c in self._terms.items():
            total = total + (x**i) * (y**j) * c
        return total

    def at_x(self, value: int) -> UniPoly:
        """
        p(value, y) as a polynomial in y.
        """
        return self.substitute(UniPoly.constant(value), UniPoly.linear(0, 1))

    def at_y(self, value: int) -> UniPoly:
        """
        p(x, value) as a polynomial in x.
        """
        return self.substitute(UniPoly.linear(0, 1), UniPoly.constant(value))

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def to_text(self) -> str:
        """
        Canonical form: terms by (i, j) ascending, e.g. `4 + 6*y + 2*x*y^2`.
        """
        return _render((c, (("x", i), ("y", j))) for (i, j), c in self.terms())

    def __str__(self) -> str:
        return self.to_text()

    def to_json(self) -> dict[str, Any]:
        return {"terms": [[i, j, str(c)] for (i, j), c in self.terms()]}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> BiPoly:
        return cls({(int(i), int(j)): int(c) for i, j, c in data["terms"]})


class UniPoly:
    def __init__(self, coeffs: Sequence[int] = ()) -> None:
        """
        A polynomial in one variable, coefficients by ascending degree
        with trailing zeros trimmed.
        """
        trimmed = [int(c) for c in coeffs]
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        self.coeffs: tuple[int, ...] = tuple(trimmed)

    def __repr__(self) -> str:
        return self.__class__.__qualname__ + f"({list(self.coeffs)!r})"

    __slots__ = ("coeffs",)

    @classmethod
    def constant(cls, c: int) -> UniPoly:
        return cls([c])

    @classmethod
    def linear(cls, c0: int, c1: int) -> UniPoly:
        return cls([c0, c1])

    @property
    def degree(self) -> int:
        """
        Degree, with -1 for the zero polynomial.
        """
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: UniPoly | int) -> UniPoly:
        if isinstance(other, int):
            other = UniPoly.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coefficient(i) + other.coefficient(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: UniPoly | int) -> UniPoly:
        return self + (-other)

    def __mul__(self, other: UniPoly | int) -> UniPoly:
        if isinstance(other, int):
            return UniPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UniPoly:
        result = UniPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def evaluate(self, q: Number) -> Number:
        return sum((c * q**i for i, c in enumerate(self.coeffs)), 0)

    def to_text(self, var: str = "q") -> str:
        return _render((c, ((var, i),)) for i, c in enumerate(self.coeffs) if c)

    def __str__(self) -> str:
        return self.to_text()

    def to_json(self) -> dict[str, Any]:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> UniPoly:
        return cls([int(c) for c in data["coeffs"]])
