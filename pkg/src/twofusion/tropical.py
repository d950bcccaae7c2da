"""Closed-form degree and leading sign of the state-sum summands.

The degree of the summand at ``(n, k1, k2)`` is the piecewise quadratic
``Q(m1, m2, n, k1, k2)``; the pieces are cut out by which of

    l1 = 2k1 + n,   l2 = 2k1 + k2 + n,   l3 = k2 + 2n

is smallest.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .statesum import KnotParams, LatticeState

__all__ = [
    "RegionLabel",
    "QuadraticForm",
    "linear_forms",
    "Q_degree",
    "Q_value",
    "predicted_leading",
    "region_of",
    "Q_restricted",
]


class RegionLabel(enum.Enum):
    R1 = 1
    R2 = 2
    R3 = 3

    def __str__(self) -> str:
        return self.name


def linear_forms(n, k1, k2) -> tuple:
    return (2 * k1 + n, 2 * k1 + k2 + n, k2 + 2 * n)


def _q_with(m1, m2, n, k1, k2, l):
    half = Fraction(1, 2)
    return (
        half * k1 - 3 * half * k1 * k1 - 3 * k1 * k2 - k2 * k2
        - k1 * m1 - k1 * k1 * m1 - k2 * m2 - k2 * k2 * m2 - 6 * k1 * n
        - 3 * k2 * n + 2 * m1 * n + 4 * m2 * n - k2 * m2 * n - 2 * n * n
        + m1 * n * n + 2 * m2 * n * n
        + half * ((1 + 8 * k1 + 4 * k2 + 8 * n) * l - 3 * l * l)
    )


def Q_value(m1, m2, n, k1, k2) -> Fraction:
    """Q at arbitrary rational arguments (the real relaxation uses this too)."""
    m1, m2, n, k1, k2 = map(Fraction, (m1, m2, n, k1, k2))
    return _q_with(m1, m2, n, k1, k2, min(linear_forms(n, k1, k2)))


def Q_degree(p: KnotParams, s: LatticeState) -> Fraction:
    """Predicted degree of ``summand(p, s)``."""
    return Q_value(p.m1, p.m2, s.n, s.k1, s.k2)


def predicted_leading(p: KnotParams, s: LatticeState) -> tuple[int, Fraction]:
    """Predicted leading coefficient (a sign) and degree of ``summand(p, s)``."""
    n, k1, k2 = s.n, s.k1, s.k2
    e = k1 + n + min(2 * k1, 2 * k1 + k2, k2 + n)
    return (-1 if e % 2 else 1), Q_degree(p, s)


def region_of(s: LatticeState) -> RegionLabel:
    """Which ``l_i`` is minimal; ties go to the lowest index."""
    ls = linear_forms(s.n, s.k1, s.k2)
    return RegionLabel(ls.index(min(ls)) + 1)


# -- restricted quadratics -------------------------------------------------------

_VARS = ("n", "k1", "k2")


@dataclass(frozen=True)
class QuadraticForm:
    """Polynomial of degree <= 2 in (n, k1, k2) with rational coefficients.

    ``coeffs`` maps exponent triples ``(i, j, k)`` of ``n^i k1^j k2^k``.
    """

    coeffs: Mapping[tuple[int, int, int], Fraction]

    @classmethod
    def _from(cls, raw: dict) -> QuadraticForm:
        return cls({e: c for e, c in sorted(raw.items()) if c})

    @classmethod
    def const(cls, c) -> QuadraticForm:
        return cls._from({(0, 0, 0): Fraction(c)})

    @classmethod
    def var(cls, name: str) -> QuadraticForm:
        e = [0, 0, 0]
        e[_VARS.index(name)] = 1
        return cls._from({tuple(e): Fraction(1)})

    def __add__(self, other) -> QuadraticForm:
        other = _qf(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return QuadraticForm._from(out)

    __radd__ = __add__

    def __neg__(self) -> QuadraticForm:
        return QuadraticForm._from({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other) -> QuadraticForm:
        return self + (-_qf(other))

    def __rsub__(self, other) -> QuadraticForm:
        return _qf(other) - self

    def __mul__(self, other) -> QuadraticForm:
        other = _qf(other)
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return QuadraticForm._from(out)

    __rmul__ = __mul__

    def __call__(self, n, k1, k2) -> Fraction:
        total = Fraction(0)
        for (i, j, k), c in self.coeffs.items():
            total += c * Fraction(n) ** i * Fraction(k1) ** j * Fraction(k2) ** k
        return total

    def partial(self, name: str) -> QuadraticForm:
        idx = _VARS.index(name)
        out = {}
        for e, c in self.coeffs.items():
            if e[idx]:
                d = list(e)
                d[idx] -= 1
                out[tuple(d)] = c * e[idx]
        return QuadraticForm._from(out)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.coeffs), default=0)


def _qf(x) -> QuadraticForm:
    if isinstance(x, QuadraticForm):
        return x
    return QuadraticForm.const(x)


def Q_restricted(p: KnotParams | tuple, region: RegionLabel) -> QuadraticForm:
    """Q with the minimum replaced by the region's linear form.

    ``p`` may also be a pair of rationals.
    """
    if isinstance(p, KnotParams):
        m1, m2 = Fraction(p.m1), Fraction(p.m2)
    else:
        m1, m2 = map(Fraction, p)
    n, k1, k2 = (QuadraticForm.var(v) for v in _VARS)
    l = linear_forms(n, k1, k2)[region.value - 1]
    return _q_with(m1, m2, n, k1, k2, l)
