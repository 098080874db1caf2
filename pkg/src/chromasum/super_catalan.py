"""Super Catalan numbers S(m, n) and their circular normalization Omega(m, n)."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .polynumber import circular_polynumber, coefficient_at

__all__ = [
    "super_catalan",
    "circular_super_catalan",
    "gmt_identity_check",
    "SuperCatalanTable",
    "super_catalan_table",
]


@functools.lru_cache(maxsize=4096)
def super_catalan(m: int, n: int) -> int:
    """(2m)! (2n)! / (m! n! (m+n)!), an integer for all m, n >= 0."""
    if m < 0 or n < 0:
        raise ValueError("super Catalan numbers need m, n >= 0")
    f = math.factorial
    num = f(2 * m) * f(2 * n)
    den = f(m) * f(n) * f(m + n)
    q, rem = divmod(num, den)
    assert rem == 0
    return q


def circular_super_catalan(m: int, n: int) -> Fraction:
    """S(m, n) / 4^(m+n) in lowest terms."""
    return Fraction(super_catalan(m, n), 4 ** (m + n))


def gmt_identity_check(m: int, n: int) -> bool:
    """Compare Omega(m, n) with the signed central coefficient of pi_{2m,2n}.

    The two sides share no code: the left is a factorial quotient, the right a
    convolution of binomial rows.
    """
    lhs = circular_super_catalan(m, n)
    rhs = (-1) ** n * coefficient_at(circular_polynumber(2 * m, 2 * n), m + n)
    return lhs == rhs


@dataclass
class SuperCatalanTable:
    max_m: int
    max_n: int
    s_values: list[list[int]] = field(repr=False)
    omega_values: list[list[Fraction]] = field(repr=False)


def super_catalan_table(max_m: int, max_n: int | None = None) -> SuperCatalanTable:
    max_n = max_m if max_n is None else max_n
    s = [[super_catalan(m, n) for n in range(max_n + 1)] for m in range(max_m + 1)]
    omega = [[Fraction(s[m][n], 4 ** (m + n)) for n in range(max_n + 1)] for m in range(max_m + 1)]
    return SuperCatalanTable(max_m, max_n, s, omega)
