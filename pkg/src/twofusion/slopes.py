"""Closed-form Jones slopes of K(m1, m2): lattice and real versions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .statesum import KnotParams

__all__ = [
    "NoSector",
    "SectorLabel",
    "js",
    "js_real",
    "lattice_sector",
    "real_sector",
    "interior_value",
    "mirror_slope",
    "compare_lattice_real",
    "REAL_BRANCHES",
]


class NoSector(ValueError):
    """No branch condition applies to the given parameters."""


@dataclass(frozen=True)
class SectorLabel:
    kind: str  # "lattice" or "real"
    index: str

    def __str__(self) -> str:
        return self.index


HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)

EXCEPTIONAL = {(1, 0): Fraction(3, 2), (2, -1): Fraction(0)}


def _pos_twist(m1, m2):
    return (m1 - 1) ** 2 / (4 * (m1 + m2 - 1)) + (3 * m1 + 9 * m2 + 3) / Fraction(4)


def _neg_twist(m1, m2):
    return m1 * m1 / (4 * (m1 + m2 + 1)) + (3 * m1 + 9 * m2 + 3) / Fraction(4)


def _red(m1, m2):
    return 2 * m2 + HALF


def _green(m1, m2):
    return (2 * m1 + 3 * m2) ** 2 / (4 * (m1 + m2 - HALF))


def interior_value(m1, m2) -> Fraction:
    """The rational function valid on the small region near the origin."""
    num = (
        3 + 6 * m1 + 4 * m1 * m1 + 18 * m2 + 24 * m1 * m2 + 8 * m1 * m1 * m2
        + 27 * m2 * m2 + 18 * m1 * m2 * m2
    )
    return num / (4 * (1 + m1 + 3 * m2 + 2 * m1 * m2))


# (label, condition, value) in precedence order.
LATTICE_BRANCHES: tuple[tuple[str, Callable, Callable], ...] = (
    ("L1", lambda a, b: a >= 1 and b >= 0, _pos_twist),
    ("L2", lambda a, b: a <= 0 and b >= -1 - 2 * a and b >= 1, _neg_twist),
    ("L3", lambda a, b: 0 < b < -1 - 2 * a, _red),
    ("L4", lambda a, b: b <= 0 and 3 * b <= -2 * a, lambda a, b: Fraction(0)),
    ("L5", lambda a, b: 3 * b > -2 * a and b <= -1, _green),
)

REAL_BRANCHES: tuple[tuple[str, Callable, Callable], ...] = (
    ("R1", lambda a, b: a > 1 and b >= 0, _pos_twist),
    (
        "R2",
        lambda a, b: 0 <= a <= 1 and 1 + a + 3 * b >= 0 and 1 - a + b >= 0,
        lambda a, b: (a + 1) / Fraction(2) + (a + 9 * b + 1) / Fraction(4),
    ),
    ("R3", lambda a, b: a <= 0 and b >= 0 and b >= -1 - 2 * a, _neg_twist),
    ("R4", lambda a, b: b > 0 and 1 + 2 * a + b <= 0, _red),
    (
        "R5",
        lambda a, b: -THIRD <= b <= 0 and 1 + 2 * a + 3 * b + 4 * a * b <= 0,
        lambda a, b: (3 * b + 1) ** 2 / (4 * (b + HALF)),
    ),
    (
        "R6",
        lambda a, b: b <= -THIRD and 1 + a + 3 * b <= 0 and 1 + 2 * a + 4 * b <= 0 and 3 * b <= -2 * a,
        lambda a, b: Fraction(0),
    ),
    ("R7", lambda a, b: 3 * b > -2 * a and b <= -1, _green),
    (
        "R8",
        lambda a, b: -1 <= b <= 0 and 1 - a + b <= 0 and 1 + 2 * a + 4 * b >= 0,
        lambda a, b: a + 2 * b + HALF,
    ),
    (
        "R9",
        lambda a, b: 1 + 2 * a + 3 * b + 4 * a * b >= 0 and -HALF <= a <= 0 and -THIRD <= b <= 0,
        interior_value,
    ),
)


def _pair(p) -> tuple[int, int]:
    if isinstance(p, KnotParams):
        return p.m1, p.m2
    m1, m2 = p
    return int(m1), int(m2)


def _rational_pair(m) -> tuple[Fraction, Fraction]:
    if isinstance(m, KnotParams):
        return Fraction(m.m1), Fraction(m.m2)
    a, b = m
    return Fraction(a), Fraction(b)


def _first_match(branches, a, b, kind):
    for label, cond, value in branches:
        if cond(a, b):
            return label, value
    raise NoSector(f"no {kind} branch applies at ({a}, {b})")


def lattice_sector(p) -> SectorLabel:
    m1, m2 = _pair(p)
    if (m1, m2) in EXCEPTIONAL:
        return SectorLabel("lattice", "exceptional")
    label, _ = _first_match(LATTICE_BRANCHES, m1, m2, "lattice")
    return SectorLabel("lattice", label)


def js(p) -> Fraction:
    """Jones slope of K(m1, m2): quadratic growth rate of the colored Jones degree."""
    m1, m2 = _pair(p)
    if (m1, m2) in EXCEPTIONAL:
        return EXCEPTIONAL[(m1, m2)]
    _, value = _first_match(LATTICE_BRANCHES, m1, m2, "lattice")
    return Fraction(value(Fraction(m1), Fraction(m2)))


def real_sector(m) -> SectorLabel:
    a, b = _rational_pair(m)
    label, _ = _first_match(REAL_BRANCHES, a, b, "real")
    return SectorLabel("real", label)


def js_real(m) -> Fraction:
    """Maximum of the quadratic growth rate over the real polytope."""
    a, b = _rational_pair(m)
    _, value = _first_match(REAL_BRANCHES, a, b, "real")
    return Fraction(value(a, b))


def mirror_slope(p) -> Fraction:
    """Jones slope of the mirror image, from K(m1,m2) = -K(1-m1, -1-m2)."""
    m1, m2 = _pair(p)
    return -js((1 - m1, -1 - m2))


def compare_lattice_real(m1_range: Iterable[int], m2_range: Iterable[int]) -> list[tuple[int, int]]:
    """Integer pairs in the box where the lattice and real slopes differ."""
    m2s = list(m2_range)
    return [(a, b) for a in m1_range for b in m2s if js((a, b)) != js_real((a, b))]
