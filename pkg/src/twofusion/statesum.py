"""The fusion state sum for the 2-fusion knots K(m1, m2).

The colored Jones polynomial is a sum over the lattice points of the dilated
polytope ``nP``.  Each summand is a signed monomial (depending on the twist
parameters) times a factor ``R(n, k1, k2)`` built from unknot, theta and
tetrahedron evaluations.  Individual summands are in general rational
functions of ``q^(1/2)``; only the full sum is a Laurent polynomial.

Two evaluation routes are provided:

* ``method="series"`` expands every summand at q = infinity and adds the
  truncated series (fast, the default);
* ``method="blocks"`` multiplies every summand by a common denominator, sums
  exact Laurent polynomials and divides once at the end.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from . import blocks
from .expansion import Product, sum_window
from .qlaurent import LaurentPolynomial, NotDivisible, QExponent, exact_divide, invert_q, parse

__all__ = [
    "KnotParams",
    "LatticeState",
    "Summand",
    "polytope_points",
    "writhe",
    "state_monomial",
    "summand",
    "colored_jones",
    "jones_top",
    "GoldenRecord",
    "load_golden",
    "GOLDEN_PATH",
]


@dataclass(frozen=True)
class KnotParams:
    m1: int
    m2: int


@dataclass(frozen=True, order=True)
class LatticeState:
    n: int
    k1: int
    k2: int

    def in_polytope(self) -> bool:
        n, k1, k2 = self.n, self.k1, self.k2
        return 0 <= k1 <= n and abs(n - 2 * k1) <= n + 2 * k2 <= n + 2 * k1

    @property
    def k(self) -> tuple[int, int]:
        return (self.k1, self.k2)


def polytope_points(n: int) -> list[LatticeState]:
    """Lattice points of ``nP`` in lexicographic ``(k1, k2)`` order."""
    if n < 0:
        raise ValueError("color must be a natural number")
    pts = []
    for k1 in range(n + 1):
        lo = -((n - abs(n - 2 * k1)) // 2)
        for k2 in range(lo, k1 + 1):
            pts.append(LatticeState(n, k1, k2))
    return pts


def writhe(p: KnotParams) -> int:
    return 2 * p.m1 + 6 * p.m2 + 2


def _check_state(s: LatticeState) -> None:
    if s.n < 0 or not s.in_polytope():
        raise blocks.NotAdmissible(f"{s} is not a lattice point of nP")


def _twist_monomial(p: KnotParams, s: LatticeState) -> LaurentPolynomial:
    n, k1, k2 = s.n, s.k1, s.k2
    return (
        blocks.mu(n) ** (-writhe(p))
        * blocks.nu(2 * k1, n, n) ** (2 * p.m1 + 2 * p.m2)
        * blocks.nu(n + 2 * k2, 2 * k1, n) ** (2 * p.m2 + 1)
    )


def state_monomial(p: KnotParams, s: LatticeState) -> tuple[int, int]:
    """Sign and eighths-exponent of the twist monomial of a summand."""
    _check_state(s)
    coeff, exp = _twist_monomial(p, s).leading_term()
    return coeff, exp.eighths


@dataclass(frozen=True)
class Summand:
    """A summand as an exact quotient ``numerator / denominator``.

    The denominator is ``U(n) Theta(n,n,2k1) Theta(n,2k1,n+2k2)``, whose
    leading coefficient is a unit, so degree and leading term are exact.
    """

    numerator: LaurentPolynomial
    denominator: LaurentPolynomial

    def degree(self) -> QExponent:
        return self.numerator.degree() + (-self.denominator.degree())

    def leading_term(self) -> tuple[int, QExponent]:
        cn, en = self.numerator.leading_term()
        cd, ed = self.denominator.leading_term()
        assert cd in (1, -1)
        return cn * cd, en + (-ed)

    def to_polynomial(self) -> LaurentPolynomial:
        """The summand as a Laurent polynomial; NotDivisible if it is not one."""
        return exact_divide(self.numerator, self.denominator)

    def times(self, poly: LaurentPolynomial) -> LaurentPolynomial:
        """``summand * poly``, which must be a Laurent polynomial."""
        return exact_divide(self.numerator * poly, self.denominator)


@lru_cache(maxsize=4096)
def _state_blocks(s: LatticeState) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    n, k1, k2 = s.n, s.k1, s.k2
    c = n + 2 * k2
    num = blocks.u_block(2 * k1) * blocks.u_block(c) * blocks.tet(
        blocks.TetLabels(n, 2 * k1, 2 * k1, n, n, c)
    )
    den = blocks.u_block(n) * blocks.theta(n, n, 2 * k1) * blocks.theta(n, 2 * k1, c)
    return num, den


def summand(p: KnotParams, s: LatticeState) -> Summand:
    _check_state(s)
    num, den = _state_blocks(s)
    return Summand(_twist_monomial(p, s) * num, den)


# -- series route --------------------------------------------------------------


@lru_cache(maxsize=8192)
def _state_products(s: LatticeState) -> tuple[tuple[int, int, tuple[tuple[int, int], ...]], ...]:
    """``R(s)`` as a list of products, one per term of the Tet sum."""
    n, k1, k2 = s.n, s.k1, s.k2
    c = n + 2 * k2
    base = Product()
    # U(2k1) U(c) / U(n)
    base.times_sign((-1) ** (c % 2))  # (-1)^(2k1) = 1
    base.times_integer(2 * k1 + 1).times_integer(c + 1)
    base.times_sign((-1) ** (n % 2)).times_integer(n + 1, -1)
    # 1 / Theta(n, n, 2k1) / Theta(n, 2k1, c)
    for a, b, cc in ((n, n, 2 * k1), (n, 2 * k1, c)):
        half = (a + b + cc) // 2
        base.times_sign((-1) ** (half % 2))
        base.times_integer(half + 1, -1)
        base.times_multinomial(half, (half - a, half - b, half - cc), -1)
    labels = blocks.TetLabels(n, 2 * k1, 2 * k1, n, n, c)
    S, T = labels.S, labels.T
    terms = []
    for k in range(max(T), min(S) + 1):
        term = base.copy()
        term.times_sign((-1) ** (k % 2)).times_integer(k + 1)
        term.times_multinomial(k, [x - k for x in S] + [k - t for t in T])
        terms.append(term.frozen())
    return tuple(terms)


def _window_terms(p: KnotParams, n: int, mirror: bool):
    """Yield the products of every summand, with the twist monomial folded in.

    The factor ``R`` is invariant under ``q -> 1/q``, so the mirror sum only
    negates the twist exponent.
    """
    for s in polytope_points(n):
        msign, me = state_monomial(p, s)
        if mirror:
            me = -me
        for sign, e, facs in _state_products(s):
            yield msign * sign, me + e, facs


def _span(p: KnotParams, n: int, mirror: bool) -> tuple[int, int]:
    """Bounds (in eighths) containing every exponent of the sum."""
    hi = lo = None
    for s in polytope_points(n):
        msign, me = state_monomial(p, s)
        if mirror:
            me = -me
        top = max(e for _, e, _ in _state_products(s))
        # R is palindromic, so its expansion at q = 0 starts at -top.
        hi = me + top if hi is None else max(hi, me + top)
        lo = me - top if lo is None else min(lo, me - top)
    return lo, hi


def _series_jones(p: KnotParams, n: int, mirror: bool) -> LaurentPolynomial:
    lo, hi = _span(p, n, mirror)
    width = (hi - lo) // 4 + 1
    window = sum_window(_window_terms(p, n, mirror), hi, width)
    return LaurentPolynomial._raw({hi - 4 * i: c for i, c in enumerate(window) if c})


def _blocks_jones(p: KnotParams, n: int, mirror: bool) -> LaurentPolynomial:
    # Every denominator U(n) Theta Theta divides D = [n+1] [2n+1]! [3n+1]!.
    common = (
        blocks.quantum_integer(n + 1)
        * blocks.quantum_factorial(2 * n + 1)
        * blocks.quantum_factorial(3 * n + 1)
    )
    total = LaurentPolynomial()
    for s in polytope_points(n):
        total = total + summand(p, s).times(common)
    result = exact_divide(total, common)
    return invert_q(result) if mirror else result


def colored_jones(
    p: KnotParams, n: int, mirror: bool = False, method: str = "series"
) -> LaurentPolynomial:
    """The colored Jones polynomial ``J_{K(m1,m2), n}``.

    ``mirror`` applies ``q -> 1/q`` to the result.
    """
    if n < 0:
        raise ValueError("color must be a natural number")
    if method == "series":
        result = _series_jones(p, n, mirror)
    elif method == "blocks":
        result = _blocks_jones(p, n, mirror)
    else:
        raise ValueError(f"unknown method {method!r}")
    if not result.exponents_divisible_by(4):
        raise NotDivisible("colored Jones polynomial left the half-integer lattice")
    return result


def jones_top(p: KnotParams, n: int, mirror: bool = False) -> tuple[Fraction, int]:
    """Degree and leading coefficient of ``colored_jones(p, n, mirror)``.

    Only the top of the sum is expanded; the window doubles until a nonzero
    coefficient shows up.
    """
    lo, hi = _span(p, n, mirror)
    full = (hi - lo) // 4 + 1
    width = 16
    while True:
        width = min(width, full)
        window = sum_window(_window_terms(p, n, mirror), hi, width)
        for i, c in enumerate(window):
            if c:
                return Fraction(hi - 4 * i, 8), c
        if width == full:
            raise ArithmeticError("state sum vanished identically")
        width *= 2


# -- golden fixtures -------------------------------------------------------------

GOLDEN_PATH = Path(__file__).with_name("data") / "golden.txt"


@dataclass(frozen=True)
class GoldenRecord:
    """One fixture line ``m1 m2 n : poly``, as returned by ``colored_jones(p, n)``."""

    params: KnotParams
    n: int
    poly: LaurentPolynomial
    suspect: bool = False


def load_golden(path: Path | str = GOLDEN_PATH) -> list[GoldenRecord]:
    """Read fixtures; a trailing ``# suspect`` marks a record as untrusted."""
    records = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        suspect = False
        if "#" in line:
            line, note = line.split("#", 1)
            suspect = "suspect" in note
            line = line.strip()
        head, _, body = line.partition(":")
        fields = head.split()
        if len(fields) != 3 or not body.strip():
            raise ValueError(f"{path}:{lineno}: malformed fixture line")
        m1, m2, n = map(int, fields)
        records.append(GoldenRecord(KnotParams(m1, m2), n, parse(body.strip()), suspect))
    return records
