import json
import math
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from chromasum.arith import binomial
from chromasum.polynumber import krawtchouk_value
from chromasum.super_catalan import (
    circular_super_catalan,
    gmt_identity_check,
    super_catalan,
    super_catalan_table,
)

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize("m, n, expected", [(2, 3, 12), (0, 0, 1), (9, 10, 97240), (1, 2, 4)])
def test_super_catalan_values(m, n, expected):
    assert super_catalan(m, n) == expected


@pytest.mark.parametrize(
    "m, n, expected",
    [(1, 3, "5/128"), (8, 8, "6435/2147483648"), (0, 1, "1/2"), (3, 1, "5/128"), (3, 2, "3/256")],
)
def test_circular_values(m, n, expected):
    assert circular_super_catalan(m, n) == Fraction(expected)


def test_catalan_numbers_inside():
    for n in range(15):
        catalan = binomial(2 * n, n) // (n + 1)
        assert super_catalan(1, n) == 2 * catalan
        assert super_catalan(0, n) == binomial(2 * n, n)


@given(st.integers(0, 40), st.integers(0, 40))
def test_symmetry_and_recurrence(m, n):
    assert super_catalan(m, n) == super_catalan(n, m)
    assert 4 * super_catalan(m, n) == super_catalan(m + 1, n) + super_catalan(m, n + 1)
    assert circular_super_catalan(m, n) == circular_super_catalan(m + 1, n) + circular_super_catalan(m, n + 1)


@given(st.integers(0, 40), st.integers(0, 40))
def test_quotient_is_integral(m, n):
    f = math.factorial
    x = Fraction(f(2 * m) * f(2 * n), f(m) * f(n) * f(m + n))
    assert x.denominator == 1
    den = circular_super_catalan(m, n).denominator
    assert den & (den - 1) == 0


def test_krawtchouk_bridge():
    for m in range(13):
        for n in range(13):
            assert krawtchouk_value(m + n, 2 * m + 2 * n, 2 * m) == (-1) ** m * super_catalan(m, n)


def test_central_coefficient_identity():
    assert gmt_identity_check(3, 1)
    assert gmt_identity_check(0, 0)
    assert all(gmt_identity_check(m, n) for m in range(21) for n in range(21 - m))


def test_table_matches_golden():
    table = super_catalan_table(10)
    assert table.s_values == json.loads((GOLDEN / "super_catalan.json").read_text())
    small = super_catalan_table(8)
    expected = json.loads((GOLDEN / "omega.json").read_text())
    assert small.omega_values == [[Fraction(c) for c in row] for row in expected]
