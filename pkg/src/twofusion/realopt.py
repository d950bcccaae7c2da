"""Exact maximization of the quadratic growth rate over the real polytope P.

Substituting ``k = n x`` into Q and keeping the ``n^2`` coefficient gives a
piecewise quadratic ``delta2(x)`` on

    P = {0 <= x1 <= 1, (|1 - 2 x1| - 1)/2 <= x2 <= x1}.

Each piece is a quadratic on a convex polygon, so its maximum sits at a
vertex, at a critical point of an edge, or at an interior critical point.
All arithmetic is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .statesum import KnotParams
from .tropical import Q_restricted, RegionLabel

__all__ = [
    "Quadratic2",
    "RegionPolygon",
    "REGION_POLYGONS",
    "P_VERTICES",
    "in_P",
    "delta2",
    "delta2_at",
    "maximize_over_P",
]

Point = tuple[Fraction, Fraction]


def _pt(a, b) -> Point:
    return (Fraction(a), Fraction(b))


P_VERTICES: tuple[Point, ...] = (_pt(0, 0), _pt("1/2", "-1/2"), _pt(1, 0), _pt(1, 1))


@dataclass(frozen=True)
class Quadratic2:
    """``sum c[(i, j)] x1^i x2^j`` with ``i + j <= 2``."""

    coeffs: Mapping[tuple[int, int], Fraction]

    def __call__(self, x1, x2) -> Fraction:
        x1, x2 = Fraction(x1), Fraction(x2)
        return sum((c * x1**i * x2**j for (i, j), c in self.coeffs.items()), Fraction(0))

    def c(self, i: int, j: int) -> Fraction:
        return self.coeffs.get((i, j), Fraction(0))

    def on_segment(self, p: Point, q: Point) -> tuple[Fraction, Fraction, Fraction]:
        """Coefficients ``(a, b, c)`` of ``t -> self(p + t (q - p))``."""
        d1, d2 = q[0] - p[0], q[1] - p[1]
        a = self.c(2, 0) * d1 * d1 + self.c(1, 1) * d1 * d2 + self.c(0, 2) * d2 * d2
        b = (
            2 * self.c(2, 0) * p[0] * d1
            + self.c(1, 1) * (p[0] * d2 + p[1] * d1)
            + 2 * self.c(0, 2) * p[1] * d2
            + self.c(1, 0) * d1
            + self.c(0, 1) * d2
        )
        return a, b, self(*p)

    def critical_point(self) -> Point | None:
        """Solution of grad = 0, or None when the Hessian is singular."""
        a, b, c = 2 * self.c(2, 0), self.c(1, 1), 2 * self.c(0, 2)
        det = a * c - b * b
        if det == 0:
            return None
        r1, r2 = -self.c(1, 0), -self.c(0, 1)
        return ((r1 * c - b * r2) / det, (a * r2 - b * r1) / det)


@dataclass(frozen=True)
class RegionPolygon:
    region: RegionLabel
    vertices: tuple[Point, ...]  # counterclockwise

    def contains(self, x: Point) -> bool:
        vs = self.vertices
        for i, a in enumerate(vs):
            b = vs[(i + 1) % len(vs)]
            cross = (b[0] - a[0]) * (x[1] - a[1]) - (b[1] - a[1]) * (x[0] - a[0])
            if cross < 0:
                return False
        return True

    def edges(self) -> list[tuple[Point, Point]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


# Where each l_i is minimal, in the scaled coordinates x = k / n:
# l1 <= l2 iff x2 >= 0, l2 <= l3 iff 2 x1 <= 1, l1 <= l3 iff 2 x1 <= 1 + x2.
REGION_POLYGONS: tuple[RegionPolygon, ...] = (
    RegionPolygon(RegionLabel.R1, (_pt(0, 0), _pt("1/2", 0), _pt(1, 1))),
    RegionPolygon(RegionLabel.R2, (_pt(0, 0), _pt("1/2", "-1/2"), _pt("1/2", 0))),
    RegionPolygon(RegionLabel.R3, (_pt("1/2", "-1/2"), _pt(1, 0), _pt(1, 1), _pt("1/2", 0))),
)


def in_P(x: Point) -> bool:
    x1, x2 = Fraction(x[0]), Fraction(x[1])
    return 0 <= x1 <= 1 and (abs(1 - 2 * x1) - 1) / 2 <= x2 <= x1


def delta2(m, region: RegionLabel) -> Quadratic2:
    """The ``n^2`` coefficient of Q on ``region`` after substituting ``k = n x``."""
    form = Q_restricted(m if isinstance(m, KnotParams) else tuple(m), region)
    out: dict[tuple[int, int], Fraction] = {}
    for (i, j, k), c in form.coeffs.items():
        if i + j + k == 2:
            out[(j, k)] = out.get((j, k), Fraction(0)) + c
    return Quadratic2({e: c for e, c in sorted(out.items()) if c})


def _region_at(x: Point) -> RegionLabel:
    x1, x2 = x
    ls = (2 * x1 + 1, 2 * x1 + x2 + 1, x2 + 2)
    return RegionLabel(ls.index(min(ls)) + 1)


def delta2_at(m, x: Sequence) -> Fraction:
    """``delta2`` evaluated with the region chosen by the argmin at ``x``."""
    pt = _pt(*x)
    return delta2(m, _region_at(pt))(*pt)


def _candidates(f: Quadratic2, poly: RegionPolygon) -> list[Point]:
    pts = list(poly.vertices)
    for p, q in poly.edges():
        a, b, _ = f.on_segment(p, q)
        if a != 0:
            t = -b / (2 * a)
            if 0 < t < 1:
                pts.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    crit = f.critical_point()
    if crit is not None and poly.contains(crit):
        pts.append(crit)
    return pts


def maximize_over_P(m) -> tuple[Fraction, Point]:
    """Exact maximum of the growth rate over P and a point attaining it."""
    if not isinstance(m, KnotParams):
        m = tuple(Fraction(v) for v in m)
    best: tuple[Fraction, Point] | None = None
    for poly in REGION_POLYGONS:
        f = delta2(m, poly.region)
        for x in _candidates(f, poly):
            v = f(*x)
            if best is None or v > best[0]:
                best = (v, x)
    return best
