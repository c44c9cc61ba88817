"""
Exact computation with arithmetic matroids.

- Arithmetic Tutte polynomials by two independent routes.

- Duals, Gale duals and the multiplicity axioms.

- Activity expansions and toric arrangement points.
"""

from __future__ import annotations

__version__ = "0.1.0"
