"""Sample points inside the real slope regions and on their shared seams."""
from __future__ import annotations

import itertools
from fractions import Fraction

from twofusion.slopes import REAL_BRANCHES, real_sector

EPS = Fraction(1, 10**6)
DIRECTIONS = [(dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1) if dx or dy]
BRANCH_VALUE = {label: value for label, _, value in REAL_BRANCHES}


def nearby_labels(a: Fraction, b: Fraction) -> set[str]:
    labels = {real_sector((a, b)).index}
    for dx, dy in DIRECTIONS:
        labels.add(real_sector((a + dx * EPS, b + dy * EPS)).index)
    return labels


def interior_points(per_region: int = 3) -> dict[str, list[tuple[Fraction, Fraction]]]:
    """Grid points whose whole neighbourhood lies in one region."""
    found: dict[str, list] = {label: [] for label in BRANCH_VALUE}
    grid = sorted({Fraction(i, d) for d in (1, 5, 20, 40) for i in range(-4 * d, 4 * d + 1)}, key=abs)
    for a, b in itertools.product(grid, repeat=2):
        labels = nearby_labels(a, b)
        if len(labels) == 1:
            (label,) = labels
            if len(found[label]) < per_region:
                found[label].append((a, b))
        if all(len(v) >= per_region for v in found.values()):
            break
    return found


def _seam_curves():
    # each curve is t -> (a, b); t ranges over a rational grid
    yield lambda t: (Fraction(1), t)
    yield lambda t: (Fraction(0), t)
    yield lambda t: (t, Fraction(0))
    yield lambda t: (t, Fraction(-1))
    yield lambda t: (t, Fraction(-1, 3))
    yield lambda t: (Fraction(-1, 2), t)
    yield lambda t: (-1 - 3 * t, t)
    yield lambda t: (1 + t, t)
    yield lambda t: (t, -1 - 2 * t)
    yield lambda t: (-1 - 4 * t, 2 * t)
    yield lambda t: (t, -2 * t / 3)
    yield lambda t: (-(1 + 3 * t) / (2 + 4 * t), t) if 2 + 4 * t else None


def seam_points() -> list[tuple[tuple[Fraction, Fraction], set[str]]]:
    """Points on region boundaries, with the labels met just around them."""
    out = []
    ts = sorted({Fraction(i, 12) for i in range(-36, 37)})
    for curve in _seam_curves():
        for t in ts:
            pt = curve(t)
            if pt is None or max(abs(pt[0]), abs(pt[1])) > 4:
                continue
            labels = nearby_labels(*pt)
            if len(labels) > 1:
                out.append((pt, labels))
    return out
