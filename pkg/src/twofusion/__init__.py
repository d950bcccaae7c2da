"""Exact colored Jones polynomials and Jones slopes of the 2-fusion knots K(m1, m2)."""
from __future__ import annotations

from .qlaurent import LaurentPolynomial, QExponent, parse, format_poly
from .statesum import KnotParams, LatticeState, colored_jones, polytope_points

__all__ = [
    "LaurentPolynomial",
    "QExponent",
    "parse",
    "format_poly",
    "KnotParams",
    "LatticeState",
    "colored_jones",
    "polytope_points",
]

__version__ = "0.1.0"
