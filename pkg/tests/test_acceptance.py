"""Acceptance gate: one PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
Tolerances are exact unless stated: every comparison is rational equality.
"""
from __future__ import annotations

import itertools
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from regions import BRANCH_VALUE, DIRECTIONS, EPS, interior_points, seam_points  # noqa: E402
from twofusion import blocks  # noqa: E402
from twofusion.qip import cancellation_report, extract_slope  # noqa: E402
from twofusion.qlaurent import LaurentPolynomial, format_poly, parse  # noqa: E402
from twofusion.realopt import maximize_over_P  # noqa: E402
from twofusion.slopes import compare_lattice_real, js, js_real, real_sector  # noqa: E402
from twofusion.statesum import GOLDEN_PATH, KnotParams, colored_jones, polytope_points, summand  # noqa: E402
from twofusion.tropical import Q_degree, predicted_leading  # noqa: E402

GOLDEN_SECONDS = 10.0
TROPICAL_SECONDS = 120.0
SLOPE_SECONDS = 600.0
BLOCK_COLOR_MAX = 8
DROP_FIT_N, DROP_CHECK_N = 10, 20

REPRESENTATIVES = [(2, 1), (3, 2), (-1, 2), (0, 1), (-2, 2), (1, -1), (2, -1), (1, 0), (4, -2), (5, -3)]


def _report(number: int, ok: bool, detail: str) -> bool:
    print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} - {detail}", flush=True)
    return ok


def criterion_1() -> bool:
    t0 = time.perf_counter()
    checked, skipped, bad = 0, [], []
    for raw in GOLDEN_PATH.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        body, _, note = line.partition("#")
        head, _, text = body.partition(":")
        m1, m2, n = map(int, head.split())
        got = format_poly(colored_jones(KnotParams(m1, m2), n))
        if "suspect" in note:
            skipped.append(f"({m1},{m2}) n={n} {'agrees' if got == text.strip() else 'differs'}")
            continue
        checked += 1
        if got != text.strip():
            bad.append((m1, m2, n))
    elapsed = time.perf_counter() - t0
    ok = not bad and checked == 14 and elapsed < GOLDEN_SECONDS
    return _report(1, ok, f"{checked} rows byte-exact, mismatches {bad}, suspect skipped: {skipped}; {elapsed:.1f}s")


def criterion_2() -> bool:
    t0 = time.perf_counter()
    states, errors = 0, []
    for m1, m2 in itertools.product(range(-4, 5), repeat=2):
        p = KnotParams(m1, m2)
        for n in range(9):
            for s in polytope_points(n):
                states += 1
                c, e = summand(p, s).leading_term()
                if e.value != Q_degree(p, s) or predicted_leading(p, s) != (c, e.value):
                    errors.append((m1, m2, s))
    elapsed = time.perf_counter() - t0
    ok = not errors and elapsed < TROPICAL_SECONDS
    return _report(2, ok, f"{states} states, {len(errors)} exceptions; {elapsed:.1f}s")


def criterion_3() -> bool:
    checked, errors = 0, []
    colors = range(BLOCK_COLOR_MAX + 1)
    for a in colors:
        checked += 2
        if (blocks.mu(a).leading_term()[0], blocks.mu(a).degree().value) != blocks.mu_degree(a):
            errors.append(("mu", a))
        c, e = blocks.u_block(a).leading_term()
        if (c, e.value) != blocks.u_degree(a):
            errors.append(("U", a))
    for t in itertools.product(colors, repeat=3):
        if not blocks.is_admissible(*t):
            continue
        checked += 2
        c, e = blocks.nu(*t).leading_term()
        if (c, e.value) != blocks.nu_degree(*t):
            errors.append(("nu", t))
        c, e = blocks.theta(*t).leading_term()
        if (c, e.value) != blocks.theta_degree(*t):
            errors.append(("theta", t))
    for labels in itertools.product(colors, repeat=6):
        L = blocks.TetLabels(*labels)
        if not L.is_admissible():
            continue
        checked += 1
        c, e = blocks.tet(L).leading_term()
        if (c, e.value) != blocks.tet_degree(L):
            errors.append(("tet", labels))
    return _report(3, not errors, f"{checked} block evaluations with colors <= {BLOCK_COLOR_MAX}, {len(errors)} exceptions")


def criterion_4() -> bool:
    t0 = time.perf_counter()
    bad = []
    for m in REPRESENTATIVES:
        try:
            fitted = extract_slope(KnotParams(*m), 25)
        except Exception as exc:  # a failed fit is a failed criterion, not a crash
            fitted = f"error: {exc}"
        if fitted != js(m):
            bad.append((m, str(fitted), str(js(m))))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < SLOPE_SECONDS
    return _report(4, ok, f"{len(REPRESENTATIVES) - len(bad)}/{len(REPRESENTATIVES)} fitted slopes equal js, mismatches {bad}; {elapsed:.1f}s")


def criterion_5() -> bool:
    got = set(compare_lattice_real(range(-6, 7), range(-6, 7)))
    want = {(m1, 0) for m1 in range(-6, 1)} | {(2, -1)}
    return _report(5, got == want, f"disagreements {sorted(got)}")


def criterion_6() -> bool:
    inside = interior_points(3)
    seams = seam_points()
    errors = []
    for label, pts in inside.items():
        if len(pts) < 3:
            errors.append(("too few interior points", label))
        for m in pts:
            if maximize_over_P(m)[0] != js_real(m):
                errors.append(("interior", label, m))
    for (a, b), labels in seams:
        v = js_real((a, b))
        if maximize_over_P((a, b))[0] != v:
            errors.append(("boundary", (a, b)))
        for label in labels:
            try:
                if Fraction(BRANCH_VALUE[label](a, b)) != v:
                    errors.append(("discontinuous", label, (a, b)))
            except ZeroDivisionError:
                near = [(a + dx * EPS, b + dy * EPS) for dx, dy in DIRECTIONS]
                near = [x for x in near if real_sector(x).index == label]
                if not near or any(abs(BRANCH_VALUE[label](*x) - v) > 10 * EPS for x in near):
                    errors.append(("discontinuous limit", label, (a, b)))
    ok = not errors and len(seams) >= 10
    n_in = sum(len(v) for v in inside.values())
    return _report(6, ok, f"{n_in} interior points in {len(inside)} regions, {len(seams)} boundary points, {len(errors)} exceptions")


def criterion_7() -> bool:
    details, ok = [], True
    for m in [(4, -2), (5, -3)]:
        p = KnotParams(*m)
        reports = [cancellation_report(p, n) for n in range(1, DROP_CHECK_N + 1)]
        # C is read off the first half and must then hold on the whole range
        C = max(r.drop / r.n for r in reports if r.n <= DROP_FIT_N)
        within = all(r.drop <= C * r.n for r in reports)
        tight = all(r.drop == 0 for r in reports if not r.cancels)
        drops = [int(r.drop) for r in reports if r.drop]
        ok &= within and tight and C > 0
        details.append(f"{m}: C={C}, drops {drops}, bound {'holds' if within else 'fails'}, tight off-tie {tight}")
    return _report(7, ok, "; ".join(details))


def _random_poly(rng: random.Random, terms: int = 6) -> LaurentPolynomial:
    out = LaurentPolynomial()
    for _ in range(rng.randint(1, terms)):
        out = out + LaurentPolynomial.monomial(rng.randint(-9, 9), Fraction(rng.randint(-40, 40), 4))
    return out


def criterion_8() -> bool:
    rng = random.Random(20240601)
    errors = []
    pairs = 0
    while pairs < 1000:
        f, g = _random_poly(rng), _random_poly(rng)
        if f.is_zero() or g.is_zero():
            continue
        pairs += 1
        if (f * g).degree() != f.degree() + g.degree():
            errors.append(("additivity", f, g))
        if not (f + g).is_zero() and (f + g).degree() > max(f.degree(), g.degree()):
            errors.append(("subadditivity", f, g))
    labelings = 0
    while labelings < 200:
        L = blocks.TetLabels(*(rng.randint(0, 6) for _ in range(6)))
        a, b, e = L.triples()[0]
        if not L.is_admissible():
            continue
        labelings += 1
        if len({blocks.theta(*perm) for perm in itertools.permutations((a, b, e))}) != 1:
            errors.append(("theta", (a, b, e)))
        # swapping (a,d) with (b,c), and (a,d) with (c,b), permute the face triples
        for M in (
            blocks.TetLabels(L.b, L.a, L.d, L.c, L.e, L.f),
            blocks.TetLabels(L.d, L.c, L.b, L.a, L.e, L.f),
        ):
            if sorted(M.S) != sorted(L.S) or sorted(M.T) != sorted(L.T) or blocks.tet(M) != blocks.tet(L):
                errors.append(("tet", L))
    for _ in range(500):
        f = _random_poly(rng, 10)
        if parse(format_poly(f)) != f or format_poly(parse(format_poly(f))) != format_poly(f):
            errors.append(("round trip", f))
    return _report(8, not errors, f"{pairs} degree pairs, {labelings} block labelings, 500 round trips, {len(errors)} exceptions")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("number", range(1, 9))
def test_criterion(number, capsys):
    with capsys.disabled():
        ok = CRITERIA[number - 1]()
    assert ok


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
