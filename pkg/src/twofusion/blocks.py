"""Quantum integers and the fusion building blocks mu, nu, U, Theta and Tet.

All blocks are returned as exact :class:`LaurentPolynomial` values.  Colors
are natural numbers; admissibility violations raise :class:`NotAdmissible`
instead of silently producing zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .qlaurent import LaurentPolynomial, exact_divide

__all__ = [
    "NotAdmissible",
    "PartsMismatch",
    "AdmissibleTriple",
    "TetLabels",
    "is_admissible",
    "check_admissible",
    "quantum_integer",
    "quantum_factorial",
    "quantum_multinomial",
    "mu",
    "nu",
    "u_block",
    "theta",
    "tet",
    "mu_degree",
    "nu_degree",
    "u_degree",
    "theta_degree",
    "tet_degree",
    "multinomial_degree",
    "factorial_degree",
    "integer_degree",
]


class NotAdmissible(ValueError):
    """A color triple or tetrahedron labeling fails admissibility."""


class PartsMismatch(ValueError):
    """The parts of a multinomial do not sum to its top argument."""


def is_admissible(a: int, b: int, c: int) -> bool:
    return (
        min(a, b, c) >= 0
        and (a + b + c) % 2 == 0
        and a <= b + c
        and b <= a + c
        and c <= a + b
    )


def check_admissible(a: int, b: int, c: int) -> None:
    if not is_admissible(a, b, c):
        raise NotAdmissible(f"triple ({a}, {b}, {c}) is not admissible")


@dataclass(frozen=True)
class AdmissibleTriple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        check_admissible(self.a, self.b, self.c)


@dataclass(frozen=True)
class TetLabels:
    """Six edge colors of a tetrahedron.

    The vertex triples are (a,b,e), (a,c,f), (c,d,e) and (b,d,f); the
    face-pair sums ``S`` and vertex half-perimeters ``T`` drive the
    evaluation.
    """

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def triples(self) -> tuple[tuple[int, int, int], ...]:
        a, b, c, d, e, f = self.a, self.b, self.c, self.d, self.e, self.f
        return ((a, b, e), (a, c, f), (c, d, e), (b, d, f))

    def is_admissible(self) -> bool:
        return all(is_admissible(*t) for t in self.triples())

    def check(self) -> None:
        for t in self.triples():
            check_admissible(*t)

    @property
    def S(self) -> tuple[int, int, int]:
        a, b, c, d, e, f = self.a, self.b, self.c, self.d, self.e, self.f
        return ((a + d + b + c) // 2, (a + d + e + f) // 2, (b + c + e + f) // 2)

    @property
    def T(self) -> tuple[int, int, int, int]:
        return tuple(sum(t) // 2 for t in self.triples())


# -- quantum combinatorics ---------------------------------------------------


def quantum_integer(n: int) -> LaurentPolynomial:
    """``[n] = q^((n-1)/2) + q^((n-3)/2) + ... + q^(-(n-1)/2)``."""
    if n < 0:
        raise ValueError("quantum_integer takes a natural number")
    return LaurentPolynomial._raw({4 * (n - 1 - 2 * i): 1 for i in range(n)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> LaurentPolynomial:
    """``[n]! = [1][2]...[n]`` with ``[0]! = 1``."""
    if n < 0:
        raise ValueError("quantum_factorial takes a natural number")
    if n == 0:
        return LaurentPolynomial.constant(1)
    return quantum_factorial(n - 1) * quantum_integer(n)


def quantum_multinomial(a: int, parts: Sequence[int]) -> LaurentPolynomial:
    """``[a]! / prod [a_i]!`` computed by exact division."""
    if any(p < 0 for p in parts):
        raise PartsMismatch(f"negative part in {list(parts)}")
    if sum(parts) != a:
        raise PartsMismatch(f"parts {list(parts)} do not sum to {a}")
    den = LaurentPolynomial.constant(1)
    for p in parts:
        if p > 1:
            den = den * quantum_factorial(p)
    return exact_divide(quantum_factorial(a), den)


# -- blocks --------------------------------------------------------------------


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def mu(a: int) -> LaurentPolynomial:
    """``(-1)^a q^(-a(a+2)/4)``."""
    return LaurentPolynomial.monomial_eighths(_sign(a), -2 * a * (a + 2))


def nu(c: int, a: int, b: int) -> LaurentPolynomial:
    """``(-1)^((a+b-c)/2) q^((a(a+2)+b(b+2)-c(c+2))/8)``."""
    check_admissible(a, b, c)
    return LaurentPolynomial.monomial_eighths(
        _sign((a + b - c) // 2), a * (a + 2) + b * (b + 2) - c * (c + 2)
    )


def u_block(a: int) -> LaurentPolynomial:
    """The colored unknot ``(-1)^a [a+1]``."""
    return _sign(a) * quantum_integer(a + 1)


def theta(a: int, b: int, c: int) -> LaurentPolynomial:
    check_admissible(a, b, c)
    s = (a + b + c) // 2
    parts = (s - a, s - b, s - c)
    return _sign(s) * quantum_integer(s + 1) * quantum_multinomial(s, parts)


def _tet_term(k: int, S: Sequence[int], T: Sequence[int]) -> LaurentPolynomial:
    parts = [s - k for s in S] + [k - t for t in T]
    return _sign(k) * quantum_integer(k + 1) * quantum_multinomial(k, parts)


def tet(labels: TetLabels) -> LaurentPolynomial:
    """Tetrahedron evaluation: signed sum over ``k`` from ``max T`` to ``min S``."""
    labels.check()
    S, T = labels.S, labels.T
    lo, hi = max(T), min(S)
    assert lo <= hi, f"empty Tet range for {labels}"
    total = LaurentPolynomial()
    for k in range(lo, hi + 1):
        total = total + _tet_term(k, S, T)
    return total


# -- closed-form degrees and leading signs ----------------------------------------
#
# These are the tropical (top-degree) laws used to cross-check the exact
# blocks; each returns (sign, degree) with the degree an exact Fraction.


def integer_degree(a: int) -> Fraction:
    return Fraction(a - 1, 2)


def factorial_degree(a: int) -> Fraction:
    return Fraction(a * a - a, 4)


def multinomial_degree(parts: Sequence[int]) -> Fraction:
    total = sum(parts)
    return Fraction(total * total - sum(p * p for p in parts), 4)


def mu_degree(a: int) -> tuple[int, Fraction]:
    return _sign(a), Fraction(-a * (a + 2), 4)


def nu_degree(c: int, a: int, b: int) -> tuple[int, Fraction]:
    return _sign((a + b - c) // 2), Fraction(a * (a + 2) + b * (b + 2) - c * (c + 2), 8)


def u_degree(a: int) -> tuple[int, Fraction]:
    return _sign(a), Fraction(a, 2)


def theta_degree(a: int, b: int, c: int) -> tuple[int, Fraction]:
    deg = (
        Fraction(-(a * a + b * b + c * c), 8)
        + Fraction(a * b + a * c + b * c, 4)
        + Fraction(a + b + c, 4)
    )
    return _sign((a + b + c) // 2), deg


def tet_degree(labels: TetLabels) -> tuple[int, Fraction]:
    """Leading sign and degree of Tet, attained by the term ``k = min S``."""
    S, T = labels.S, labels.T
    k = min(S)
    parts = [s - k for s in S] + [k - t for t in T]
    return _sign(k), integer_degree(k + 1) + multinomial_degree(parts)
