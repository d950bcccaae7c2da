"""Sparse Laurent polynomials in q^(1/8) with integer coefficients.

Exponents are stored as integers counting eighths, so ``q^(3/4)`` is the
exponent 6.  Polynomials are immutable; every operation returns a new value.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Iterable, Iterator, Mapping

__all__ = [
    "QExponent",
    "LaurentPolynomial",
    "NotDivisible",
    "ZeroPolynomial",
    "ParseError",
    "add",
    "mul",
    "exact_divide",
    "degree",
    "leading_term",
    "invert_q",
    "parse",
    "format_poly",
]

EXPONENT_DENOMINATOR = 8


class NotDivisible(ArithmeticError):
    """Raised when a division leaves a nonzero remainder."""


class ZeroPolynomial(ValueError):
    """Raised when degree or leading term is requested for the zero polynomial."""


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@total_ordering
@dataclass(frozen=True)
class QExponent:
    """An exponent of q, stored as a count of eighths."""

    eighths: int

    @classmethod
    def of(cls, value) -> QExponent:
        value = Fraction(value)
        scaled = value * EXPONENT_DENOMINATOR
        if scaled.denominator != 1:
            raise ValueError(f"{value} is not a multiple of 1/{EXPONENT_DENOMINATOR}")
        return cls(int(scaled))

    @property
    def value(self) -> Fraction:
        return Fraction(self.eighths, EXPONENT_DENOMINATOR)

    def __lt__(self, other: QExponent) -> bool:
        if not isinstance(other, QExponent):
            return NotImplemented
        return self.eighths < other.eighths

    def __add__(self, other: QExponent) -> QExponent:
        return QExponent(self.eighths + other.eighths)

    def __neg__(self) -> QExponent:
        return QExponent(-self.eighths)

    def __str__(self) -> str:
        return _format_exponent(self.eighths)


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial ``sum c_e q^(e/8)``.

    The constructor accepts a mapping from eighths-exponents to integer
    coefficients; zero coefficients are dropped so equal polynomials always
    carry identical term sets.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for e, c in items:
            if c:
                clean[int(e)] = clean.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPolynomial:
        # Caller guarantees no zero coefficients.
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> LaurentPolynomial:
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, coeff: int, exponent) -> LaurentPolynomial:
        """``coeff * q^exponent``; the exponent may be an int, Fraction or QExponent."""
        if isinstance(exponent, QExponent):
            e = exponent.eighths
        else:
            e = QExponent.of(exponent).eighths
        return cls._raw({e: coeff} if coeff else {})

    @classmethod
    def monomial_eighths(cls, coeff: int, eighths: int) -> LaurentPolynomial:
        return cls._raw({eighths: coeff} if coeff else {})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        """A copy of the ``{eighths: coefficient}`` table."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        """Terms as ``(eighths, coefficient)`` in increasing exponent order."""
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exponent) -> int:
        return self._terms.get(QExponent.of(exponent).eighths, 0)

    def degree(self) -> QExponent:
        if not self._terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return QExponent(max(self._terms))

    def low_degree(self) -> QExponent:
        if not self._terms:
            raise ZeroPolynomial("low degree of the zero polynomial")
        return QExponent(min(self._terms))

    def leading_term(self) -> tuple[int, QExponent]:
        top = self.degree()
        return self._terms[top.eighths], top

    def exponents_divisible_by(self, eighths: int) -> bool:
        return all(e % eighths == 0 for e in self._terms)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other) -> LaurentPolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPolynomial:
        return (-self) + other

    def __mul__(self, other) -> LaurentPolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPolynomial._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPolynomial._raw({e + eb: c * cb for e, c in a.items()})
        if len(a) * len(b) > 4096:
            return LaurentPolynomial._raw(_dense_mul(a, b))
        out: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPolynomial:
        if k < 0:
            if not self.is_monomial():
                raise NotDivisible("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise NotDivisible(f"monomial with coefficient {c} is not a unit")
            return LaurentPolynomial._raw({e * k: c ** (-k)})
        result = LaurentPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale_exponents(self, factor: int) -> LaurentPolynomial:
        return LaurentPolynomial._raw({e * factor: c for e, c in self._terms.items()})

    # -- comparison / display -------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPolynomial('{format_poly(self)}')"


def _coerce(x):
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial.constant(x)
    return NotImplemented


def _stride(exponents: Iterable[int], base: int) -> int:
    g = 0
    for e in exponents:
        g = gcd(g, e - base)
    return g or 1


def _pack(coeffs: list[int], bits: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = (value << bits) + c
    return value


def _unpack(value: int, bits: int, count: int) -> list[int]:
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(count):
        digit = value & mask
        if digit >= half:
            digit -= 1 << bits
        out.append(digit)
        value = (value - digit) >> bits
    return out


def _dense_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    # Kronecker substitution: pack both operands into big integers, multiply once.
    a0, b0 = min(a), min(b)
    g = gcd(_stride(a, a0), _stride(b, b0))
    la = (max(a) - a0) // g + 1
    lb = (max(b) - b0) // g + 1
    da = [0] * la
    for e, c in a.items():
        da[(e - a0) // g] = c
    db = [0] * lb
    for e, c in b.items():
        db[(e - b0) // g] = c
    bound = max(map(abs, da)) * max(map(abs, db)) * min(la, lb)
    bits = bound.bit_length() + 2
    prod = _unpack(_pack(da, bits) * _pack(db, bits), bits, la + lb - 1)
    base = a0 + b0
    return {base + i * g: c for i, c in enumerate(prod) if c}


# -- module-level operations --------------------------------------------


def add(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    return a + b


def mul(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    return a * b


def exact_divide(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Return ``c`` with ``b * c == a``; raise NotDivisible otherwise.

    Long division from the top exponent down on dense coefficient arrays.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ta, tb = a._terms, b._terms
    if not ta:
        return LaurentPolynomial._raw({})
    if len(tb) == 1:
        (eb, cb), = tb.items()
        out = {}
        for e, c in ta.items():
            q, r = divmod(c, cb)
            if r:
                raise NotDivisible(f"coefficient {c} not divisible by {cb}")
            out[e - eb] = q
        return LaurentPolynomial._raw(out)

    a_lo, a_hi = min(ta), max(ta)
    b_lo, b_hi = min(tb), max(tb)
    if a_hi - a_lo < b_hi - b_lo:
        raise NotDivisible("dividend span shorter than divisor span")
    g = gcd(gcd(_stride(ta, a_lo), _stride(tb, b_lo)), a_lo - b_lo)
    if (a_hi - a_lo) % g or (b_hi - b_lo) % g:
        raise NotDivisible("incompatible exponent lattices")
    rem = [0] * ((a_hi - a_lo) // g + 1)
    for e, c in ta.items():
        rem[(e - a_lo) // g] = c
    div = [0] * ((b_hi - b_lo) // g + 1)
    for e, c in tb.items():
        div[(e - b_lo) // g] = c
    lead = div[-1]
    nq = len(rem) - len(div) + 1
    quot = [0] * nq
    nd = len(div) - 1
    for i in range(nq - 1, -1, -1):
        c = rem[i + nd]
        if not c:
            continue
        q, r = divmod(c, lead)
        if r:
            raise NotDivisible(f"coefficient {c} not divisible by {lead}")
        quot[i] = q
        for j, d in enumerate(div):
            if d:
                rem[i + j] -= q * d
    if any(rem[:nd]):
        raise NotDivisible("nonzero remainder")
    base = a_lo - b_lo
    return LaurentPolynomial._raw({base + i * g: c for i, c in enumerate(quot) if c})


def degree(a: LaurentPolynomial) -> QExponent:
    return a.degree()


def leading_term(a: LaurentPolynomial) -> tuple[int, QExponent]:
    return a.leading_term()


def invert_q(a: LaurentPolynomial) -> LaurentPolynomial:
    """Substitute q -> 1/q."""
    return LaurentPolynomial._raw({-e: c for e, c in a._terms.items()})


# -- text format -------------------------------------------------------------


def _format_exponent(eighths: int) -> str:
    f = Fraction(eighths, EXPONENT_DENOMINATOR)
    if f.denominator == 1:
        return str(f.numerator)
    return f"({f.numerator}/{f.denominator})"


def format_poly(a: LaurentPolynomial) -> str:
    """Canonical text: terms by increasing exponent, e.g. ``q^5+q^7-q^11``."""
    if a.is_zero():
        return "0"
    parts = []
    for e, c in a.items():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif mag == 1:
            body = f"q^{_format_exponent(e)}"
        else:
            body = f"{mag}*q^{_format_exponent(e)}"
        parts.append(sign + body)
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


_TERM = re.compile(
    r"(?P<sign>[+-])?"
    r"(?:(?P<coeff>\d+)(?P<star>\*)?)?"
    r"(?:(?P<q>q)\^(?:(?P<int>-?\d+)|\((?P<num>-?\d+)/(?P<den>\d+)\)))?"
)


def parse(text: str) -> LaurentPolynomial:
    """Parse the canonical text format (see :func:`format_poly`)."""
    if text.strip() == "0":
        return LaurentPolynomial()
    pos = 0
    n = len(text)
    terms: dict[int, int] = {}
    if n == 0:
        raise ParseError("empty input", 0)
    first = True
    while pos < n:
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if not first and m.group("sign") is None:
            raise ParseError("missing sign between terms", pos)
        coeff_s, star, has_q = m.group("coeff"), m.group("star"), m.group("q")
        if has_q is None:
            if coeff_s is None:
                raise ParseError("expected a term", m.end())
            if star:
                raise ParseError("malformed term", pos)
            eighths = 0
        else:
            if coeff_s is not None and not star:
                raise ParseError("expected '*' between coefficient and q", pos)
            if m.group("int") is not None:
                eighths = int(m.group("int")) * EXPONENT_DENOMINATOR
            else:
                num, den = int(m.group("num")), int(m.group("den"))
                if den not in (2, 4, 8):
                    raise ParseError(f"exponent denominator {den} not in {{2,4,8}}", m.start("den"))
                if Fraction(num, den).denominator != den:
                    raise ParseError("exponent fraction not reduced", m.start("num"))
                eighths = num * (EXPONENT_DENOMINATOR // den)
        coeff = int(coeff_s) if coeff_s is not None else 1
        if coeff == 0:
            raise ParseError("zero coefficient", pos)
        if m.group("sign") == "-":
            coeff = -coeff
        if eighths in terms:
            raise ParseError("repeated exponent", pos)
        terms[eighths] = coeff
        pos = m.end()
        first = False
    return LaurentPolynomial._raw(terms)
