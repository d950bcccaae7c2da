"""Lattice maximization of Q, degree sequences and quasi-polynomial fitting."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import slopes
from .statesum import KnotParams, jones_top, polytope_points
from .tropical import Q_degree, predicted_leading

__all__ = [
    "QIPResult",
    "QuasiPolynomial",
    "FitInconsistent",
    "CancellationReport",
    "ScanRow",
    "PERIODS",
    "brute_maximize",
    "degree_sequence",
    "fit_quasipolynomial",
    "extract_slope",
    "fit_degrees",
    "cancellation_report",
    "scan",
    "scan_csv",
    "scan_json",
]

PERIODS = (1, 2, 3, 4, 6)
# Shorter windows can sit inside a stretch where the maximizer does not move
# and then fit a clean quadratic with the wrong leading coefficient.
MIN_WINDOW = 18


class FitInconsistent(ValueError):
    """No quasi-polynomial of the requested shape fits the data."""


@dataclass(frozen=True)
class QIPResult:
    n: int
    max_value: Fraction
    maximizers: tuple[tuple[int, int], ...]
    tie: bool
    leading_sum_cancels: bool


def brute_maximize(p: KnotParams, n: int) -> QIPResult:
    """Maximum of Q over the lattice points of ``nP``, with all maximizers."""
    best = None
    arg: list = []
    for s in polytope_points(n):
        v = Q_degree(p, s)
        if best is None or v > best:
            best, arg = v, [s]
        elif v == best:
            arg.append(s)
    lead = sum(predicted_leading(p, s)[0] for s in arg)
    return QIPResult(
        n=n,
        max_value=best,
        maximizers=tuple(s.k for s in arg),
        tie=len(arg) > 1,
        leading_sum_cancels=lead == 0,
    )


def degree_sequence(p: KnotParams, n_max: int, mirror: bool = False) -> list[Fraction]:
    """Degrees of ``colored_jones(p, n, mirror)`` for ``n = 0..n_max``."""
    return [jones_top(p, n, mirror)[0] for n in range(n_max + 1)]


@dataclass(frozen=True)
class QuasiPolynomial:
    """``c2(n) n^2 + c1(n) n + c0(n)`` with coefficients periodic in ``n``."""

    period: int
    classes: tuple[tuple[Fraction, Fraction, Fraction], ...]

    def __call__(self, n: int) -> Fraction:
        c2, c1, c0 = self.classes[n % self.period]
        return c2 * n * n + c1 * n + c0

    @property
    def c2(self) -> Fraction:
        values = {c[0] for c in self.classes}
        if len(values) != 1:
            raise FitInconsistent(f"quadratic coefficient varies across classes: {sorted(values)}")
        return values.pop()


def _interpolate(points: Sequence[tuple[int, Fraction]]) -> tuple[Fraction, Fraction, Fraction]:
    (a, ya), (b, yb), (c, yc) = points
    wa = Fraction(ya) / ((a - b) * (a - c))
    wb = Fraction(yb) / ((b - a) * (b - c))
    wc = Fraction(yc) / ((c - a) * (c - b))
    c2 = wa + wb + wc
    c1 = -(wa * (b + c) + wb * (a + c) + wc * (a + b))
    c0 = wa * b * c + wb * a * c + wc * a * b
    return c2, c1, c0


def fit_quasipolynomial(
    seq: Sequence[Fraction],
    period: int,
    window: range | Iterable[int],
    shared_linear: bool = False,
) -> QuasiPolynomial:
    """Exact quasi-polynomial fit of ``seq`` over the indices in ``window``.

    By default each residue class is interpolated through its three largest
    indices and every other window point of the class must lie on the same
    quadratic (so each class needs at least four points).

    With ``shared_linear`` only the constant term varies with the class:
    ``c2`` and ``c1`` are solved from same-class differences, which needs far
    fewer points; the fit must still leave at least two points as checks.
    """
    if period < 1:
        raise ValueError("period must be positive")
    idx = sorted(window)
    if idx and (idx[0] < 0 or idx[-1] >= len(seq)):
        raise ValueError("window outside the sequence")
    if shared_linear:
        return _fit_shared_linear(seq, period, idx)
    classes = []
    for r in range(period):
        pts = [(n, Fraction(seq[n])) for n in idx if n % period == r]
        if len(pts) < 4:
            raise FitInconsistent(f"class {r} mod {period} has {len(pts)} points, need 4")
        coeffs = _interpolate(pts[-3:])
        c2, c1, c0 = coeffs
        for n, y in pts[:-3]:
            if c2 * n * n + c1 * n + c0 != y:
                raise FitInconsistent(f"point n={n} off the class {r} mod {period} quadratic")
        classes.append(coeffs)
    return QuasiPolynomial(period, tuple(classes))


def _fit_shared_linear(seq: Sequence[Fraction], period: int, idx: list[int]) -> QuasiPolynomial:
    if len(idx) < period + 4:
        raise FitInconsistent(f"{len(idx)} points cannot over-determine {period + 2} unknowns")
    present = set(idx)
    # y(n+p) - y(n) = c2 p (2n + p) + c1 p within a class
    diffs = [(n, Fraction(seq[n + period]) - Fraction(seq[n])) for n in idx if n + period in present]
    if len(diffs) < 2:
        raise FitInconsistent("not enough same-class pairs")
    (a, da), (b, db) = diffs[-2], diffs[-1]
    c2 = (db - da) / (2 * period * (b - a))
    c1 = da / period - c2 * (2 * a + period)
    consts: dict[int, Fraction] = {}
    for n in reversed(idx):
        consts.setdefault(n % period, Fraction(seq[n]) - c2 * n * n - c1 * n)
    if len(consts) < period:
        raise FitInconsistent("a residue class has no points in the window")
    for n in idx:
        if c2 * n * n + c1 * n + consts[n % period] != seq[n]:
            raise FitInconsistent(f"point n={n} off the shared-linear fit mod {period}")
    return QuasiPolynomial(period, tuple((c2, c1, consts[r]) for r in range(period)))


def _top_window(n_max: int, period: int) -> range:
    size = max(MIN_WINDOW, 4 * period)
    return range(max(0, n_max + 1 - size), n_max + 1)


def fit_degrees(seq: Sequence[Fraction]) -> QuasiPolynomial:
    """Fit the top of a degree sequence, trying the periods in order.

    Per-class quadratic fits are tried first for every period; the
    shared-linear model is a fallback for sequences too short for that.
    """
    n_max = len(seq) - 1
    reasons = []
    for shared in (False, True):
        for period in PERIODS:
            try:
                qp = fit_quasipolynomial(seq, period, _top_window(n_max, period), shared)
                qp.c2
                return qp
            except FitInconsistent as exc:
                kind = "shared-linear " if shared else ""
                reasons.append(f"{kind}period {period}: {exc}")
    raise FitInconsistent("; ".join(reasons))


def extract_slope(p: KnotParams, n_max: int = 25) -> Fraction:
    """Quadratic growth rate of the degree of the colored Jones polynomial."""
    if n_max < 12:
        raise FitInconsistent(f"n_max={n_max} is too small to fit (need at least 12)")
    return fit_degrees(degree_sequence(p, n_max)).c2


@dataclass(frozen=True)
class CancellationReport:
    n: int
    qip: QIPResult
    degree: Fraction
    drop: Fraction

    @property
    def cancels(self) -> bool:
        return self.qip.leading_sum_cancels


def cancellation_report(p: KnotParams, n: int) -> CancellationReport:
    """Compare the lattice maximum of Q with the true degree."""
    res = brute_maximize(p, n)
    deg = jones_top(p, n)[0]
    return CancellationReport(n=n, qip=res, degree=deg, drop=res.max_value - deg)


# -- scans -------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanRow:
    m1: int
    m2: int
    n_max: int
    fitted_c2: Fraction | None
    js_formula: Fraction
    match: bool


def scan(m1_range: range, m2_range: range, n_max: int) -> list[ScanRow]:
    rows = []
    for m1 in m1_range:
        for m2 in m2_range:
            p = KnotParams(m1, m2)
            try:
                fitted = extract_slope(p, n_max)
            except FitInconsistent:
                fitted = None
            formula = slopes.js(p)
            rows.append(ScanRow(m1, m2, n_max, fitted, formula, fitted == formula))
    return rows


_FIELDS = ("m1", "m2", "n_max", "fitted_c2", "js_formula", "match")


def _cell(v) -> str | int | bool | None:
    if isinstance(v, Fraction):
        return str(v)
    return v


def scan_csv(rows: Iterable[ScanRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(_FIELDS)
    for r in rows:
        d = asdict(r)
        w.writerow(["" if d[f] is None else _cell(d[f]) for f in _FIELDS])
    return buf.getvalue()


def scan_json(rows: Iterable[ScanRow]) -> str:
    return json.dumps([{f: _cell(asdict(r)[f]) for f in _FIELDS} for r in rows], indent=2)
