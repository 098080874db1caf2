"""Exact integer and rational helpers.

Python ints already are arbitrary precision and :class:`fractions.Fraction`
keeps numerator/denominator reduced with a positive denominator, so this
module only adds the few operations the rest of the package needs on top.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "DenominatorDivisibleByP",
    "binomial",
    "rational_reduce_mod_p",
    "format_rational",
    "parse_rational",
    "format_bigint",
    "parse_bigint",
]


class DenominatorDivisibleByP(ZeroDivisionError):
    """Raised when a rational cannot be read in F_p because p divides its denominator."""


def binomial(n: int, k: int) -> int:
    """C(n, k), taken to be 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rational_reduce_mod_p(x, p: int) -> int:
    """Residue of the rational ``x`` in F_p, as an int in [0, p)."""
    x = Fraction(x)
    den = x.denominator
    if den % p == 0:
        raise DenominatorDivisibleByP(f"{p} divides the denominator of {x}")
    return x.numerator * pow(den, -1, p) % p


def format_rational(x) -> str:
    """``num/den`` with the denominator dropped when it is 1."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def format_bigint(n: int) -> str:
    return str(int(n))


def parse_bigint(text: str) -> int:
    return int(text.strip())
