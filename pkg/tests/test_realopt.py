from __future__ import annotations

import random
from fractions import Fraction

import pytest

from regions import interior_points, seam_points
from twofusion.qip import brute_maximize
from twofusion.realopt import (
    P_VERTICES,
    REGION_POLYGONS,
    delta2,
    delta2_at,
    in_P,
    maximize_over_P,
)
from twofusion.slopes import interior_value, js_real
from twofusion.statesum import KnotParams
from twofusion.tropical import Q_restricted, RegionLabel


def test_examples():
    assert maximize_over_P((0, 0))[0] == Fraction(3, 4)
    assert maximize_over_P((4, -2))[0] == Fraction(2, 3)
    q = Fraction(-1, 4)
    assert maximize_over_P((q, q))[0] == interior_value(q, q)


def _area2(vs) -> Fraction:
    return sum(vs[i][0] * vs[(i + 1) % len(vs)][1] - vs[(i + 1) % len(vs)][0] * vs[i][1] for i in range(len(vs)))


def test_polygons_tile_P():
    for poly in REGION_POLYGONS:
        assert all(in_P(v) for v in poly.vertices)
        assert _area2(poly.vertices) > 0  # counterclockwise
    assert sum(_area2(p.vertices) for p in REGION_POLYGONS) == _area2(P_VERTICES)


def test_delta2_finite_difference():
    # Q(n, n x) is quadratic in n: its n^2 coefficient is (Q(2) - 2 Q(1) + Q(0)) / 2
    rng = random.Random(3)
    for m in [(2, 1), (4, -2), (Fraction(-1, 3), Fraction(5, 7))]:
        for region in RegionLabel:
            form = Q_restricted(m, region)
            f = delta2(m, region)
            for _ in range(5):
                x = (Fraction(rng.randint(0, 40), 40), Fraction(rng.randint(-20, 40), 40))
                q = [form(n, n * x[0], n * x[1]) for n in (0, 1, 2)]
                assert (q[2] - 2 * q[1] + q[0]) / 2 == f(*x)


def test_delta2_continuous_across_regions():
    for m in [(2, 1), (-3, 2), (0, 0)]:
        for t in (Fraction(i, 10) for i in range(11)):
            # x2 = 0 separates R1 and R2 for x1 <= 1/2, R1 and R3 beyond
            x = (t / 2, Fraction(0))
            assert delta2(m, RegionLabel.R1)(*x) == delta2(m, RegionLabel.R2)(*x)
            x = (Fraction(1, 2), -t / 2)
            assert delta2(m, RegionLabel.R2)(*x) == delta2(m, RegionLabel.R3)(*x)


def test_matches_js_real_inside_every_region():
    pts = interior_points(3)
    assert len(pts) == 9
    for label, xs in pts.items():
        assert len(xs) >= 3, label
        for m in xs:
            assert maximize_over_P(m)[0] == js_real(m), (label, m)


def test_matches_js_real_on_boundaries():
    pts = seam_points()
    assert len(pts) >= 10
    for m, _ in pts:
        assert maximize_over_P(m)[0] == js_real(m), m


@pytest.mark.parametrize("m", [(2, 1), (-3, 2), (4, -2), (0, 0), (Fraction(1, 3), Fraction(-2, 5))])
def test_soundness_on_grid(m):
    best, arg = maximize_over_P(m)
    assert in_P(arg)
    assert delta2_at(m, arg) == best
    for i in range(51):
        for j in range(51):
            x = (Fraction(i, 50), Fraction(j - 25, 50))
            if in_P(x):
                assert delta2_at(m, x) <= best


@pytest.mark.parametrize("m", [(2, 1), (3, 2), (-2, 2), (4, -2), (-1, 2)])
def test_lattice_rate_converges(m):
    target = maximize_over_P(m)[0]
    gaps = [abs(brute_maximize(KnotParams(*m), n).max_value / (n * n) - target) for n in (10, 20, 30)]
    assert gaps[0] >= gaps[1] >= gaps[2]
    assert gaps[2] <= Fraction(gaps[0]) / 2 or gaps[2] == 0
