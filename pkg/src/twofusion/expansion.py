"""Truncated expansions of products of quantum integers at q = infinity.

Every block is, up to a signed monomial, a product of factors
``P_j = 1 - q^(-j)`` raised to integer powers:

    [a] = q^((a-1)/2) * P_a / P_1

so a product of blocks and their inverses is ``sign * q^E * prod P_j^e_j``.
Expanding in ``y = q^(-1/2)`` gives a power series whose first ``W``
coefficients are the ``W`` highest coefficients in steps of ``q^(1/2)``.
Factors with ``2j >= W`` are invisible in such a window and are skipped, which
is what makes top-degree computations cheap for large colors.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = ["Product", "expand", "sum_window"]


@dataclass
class Product:
    """Mutable accumulator for ``sign * q^(eighths/8) * prod P_j^factors[j]``."""

    sign: int = 1
    eighths: int = 0
    factors: Counter = field(default_factory=Counter)

    def copy(self) -> Product:
        return Product(self.sign, self.eighths, Counter(self.factors))

    def times_sign(self, s: int) -> Product:
        self.sign *= s
        return self

    def times_monomial(self, sign: int, eighths: int) -> Product:
        self.sign *= sign
        self.eighths += eighths
        return self

    def times_integer(self, a: int, power: int = 1) -> Product:
        """Multiply by ``[a]^power`` for ``a >= 1``."""
        if a < 1:
            raise ValueError("[0] has no product form")
        if a > 1:
            self.eighths += 4 * (a - 1) * power
            self.factors[a] += power
            self.factors[1] -= power
        return self

    def times_factorial(self, a: int, power: int = 1) -> Product:
        """Multiply by ``[a]!^power``."""
        for i in range(2, a + 1):
            self.times_integer(i, power)
        return self

    def times_multinomial(self, a: int, parts: Sequence[int], power: int = 1) -> Product:
        self.times_factorial(a, power)
        for p in parts:
            self.times_factorial(p, -power)
        return self

    def frozen(self) -> tuple[int, int, tuple[tuple[int, int], ...]]:
        facs = tuple(sorted((j, e) for j, e in self.factors.items() if e and j > 0))
        return self.sign, self.eighths, facs


def expand(factors: Iterable[tuple[int, int]], length: int) -> list[int]:
    """First ``length`` coefficients in ``y = q^(-1/2)`` of ``prod (1 - y^(2j))^e``."""
    c = [0] * length
    if length == 0:
        return c
    c[0] = 1
    top = 1  # c[top:] are still zero
    for j, e in factors:
        step = 2 * j
        if step >= length or e == 0:
            continue
        if e > 0:
            for _ in range(e):
                new_top = min(length, top + step)
                c[step:new_top] = [a - b for a, b in zip(c[step:new_top], c[: new_top - step])]
                top = new_top
        else:
            top = length
            for _ in range(-e):
                # prefix recurrence c[i] += c[i - step], one block at a time
                for start in range(step, length, step):
                    stop = min(start + step, length)
                    c[start:stop] = [a + b for a, b in zip(c[start:stop], c[start - step : stop - step])]
    return c


def sum_window(
    terms: Iterable[tuple[int, int, Sequence[tuple[int, int]]]],
    top_eighths: int,
    width: int,
) -> list[int]:
    """Coefficients of ``q^(top - i/2)``, ``i < width``, in a sum of products.

    ``terms`` yields ``(sign, eighths, factors)``.  Each term's exponent must sit
    on the same half-integer lattice as ``top_eighths`` and not above it.
    """
    window = [0] * width
    for sign, eighths, factors in terms:
        gap = top_eighths - eighths
        if gap % 4:
            raise ValueError("term exponent off the half-integer lattice of the window")
        offset = gap // 4
        if offset < 0:
            raise ValueError("term exceeds the window top")
        if offset >= width:
            continue
        series = expand(factors, width - offset)
        if sign < 0:
            for i, v in enumerate(series):
                window[offset + i] -= v
        else:
            for i, v in enumerate(series):
                window[offset + i] += v
    return window
