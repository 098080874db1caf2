import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chromasum.arith import binomial
from chromasum.finite_field import SpecMismatch, field_make
from chromasum.polynumber import (
    QQ,
    OutOfRange,
    Polynumber,
    Polynumber2,
    RingMismatch,
    cauchy_mul,
    circular_polynumber,
    coefficient_at,
    delta_polynumber,
    evaluate,
    krawtchouk_generating,
    krawtchouk_polynumber,
    krawtchouk_value,
    ladder_sum,
    substitute_linear,
)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=8)


def test_trailing_zeros_are_dropped():
    assert Polynumber([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynumber([0, 0]).coeffs == ()
    assert Polynumber([0, 0]).degree is None
    assert Polynumber([1, 2, 0]) == Polynumber([1, 2])
    g = Polynumber2([[1, 0, 0], [0, 0, 0]])
    assert g.shape == (1, 1)
    assert Polynumber2(g.grid) == g


def test_difference_of_squares():
    a = Polynumber.alpha()
    assert (1 + a) * (1 - a) == Polynumber([1, 0, -1])
    x, y = Polynumber2.alpha(), Polynumber2.beta()
    assert cauchy_mul(1 + x, 1 - x) == 1 - x * x


def test_monomial_product():
    F = field_make(7)
    prod = Polynumber2.monomial(2, 1, F) * Polynumber2.monomial(1, 3, F)
    assert prod == Polynumber2.monomial(3, 4, F)
    assert list(prod.terms()) == [(3, 4, F.one)]


def test_product_of_circular_factors():
    assert circular_polynumber(1, 0) * circular_polynumber(0, 1) == circular_polynumber(1, 1)
    assert circular_polynumber(1, 1).coeffs == (Fraction(1, 4), 0, Fraction(-1, 4))


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        Polynumber([1], QQ) + Polynumber([1], field_make(5))
    with pytest.raises(RingMismatch):
        cauchy_mul(Polynumber2.alpha(field_make(3)), Polynumber2.alpha(field_make(5)))


@settings(max_examples=100, deadline=None)
@given(st.lists(rationals, max_size=5), st.lists(rationals, max_size=5), st.lists(rationals, max_size=5))
def test_one_variable_ring_laws(a, b, c):
    a, b, c = Polynumber(a), Polynumber(b), Polynumber(c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a.coeffs and b.coeffs:
        assert (a * b).degree == a.degree + b.degree


grids = st.lists(st.lists(st.integers(-3, 3), min_size=1, max_size=3), max_size=3)


@settings(max_examples=100, deadline=None)
@given(grids, grids, grids)
def test_two_variable_ring_laws(a, b, c):
    F = field_make(5)
    a, b, c = Polynumber2(a, F), Polynumber2(b, F), Polynumber2(c, F)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynumber2((), F)


def _random_poly(rng, spec, deg=3):
    return Polynumber2(
        [[spec.from_index(rng.randrange(spec.q)) for _ in range(deg + 1)] for _ in range(deg + 1)], spec
    )


@pytest.mark.parametrize("p", [3, 5])
def test_evaluation_is_multiplicative(p):
    spec = field_make(p)
    rng = random.Random(p)
    for _ in range(10):
        a, b = _random_poly(rng, spec), _random_poly(rng, spec)
        for x, y in itertools.product(spec.elements(), repeat=2):
            assert evaluate(a * b, (x, y)) == evaluate(a, (x, y)) * evaluate(b, (x, y))
            assert evaluate(a + b, (x, y)) == evaluate(a, (x, y)) + evaluate(b, (x, y))


def test_evaluation_examples():
    F = field_make(13)
    assert evaluate(Polynumber2.monomial(2, 6, F), (F(2), F(6))) == (2**2 * 6**6) % 13
    assert evaluate(Polynumber2.constant(1, F), (F(0), F(0))) == 1
    # 0^0 = 1
    assert evaluate(Polynumber2.monomial(0, 3, F), (F(0), F(2))) == 8
    with pytest.raises(SpecMismatch):
        evaluate(Polynumber2.constant(1, F), (field_make(7)(1), field_make(7)(1)))


def test_frobenius_polynumber_vanishes_everywhere():
    F = field_make(3, 2)
    pi = Polynumber2.monomial(9, 0, F) - Polynumber2.alpha(F)
    assert not pi.is_zero()
    assert all(evaluate(pi, (x, y)) == 0 for x in F.elements() for y in F.elements())


def test_coefficients_of_signed_circular_polynumber():
    neg = -circular_polynumber(6, 2)
    assert coefficient_at(neg, 4) == Fraction(5, 128)
    assert coefficient_at(circular_polynumber(1, 1), 99) == 0
    assert ladder_sum(neg, [0, 4, 8]) == Fraction(1, 32)
    assert ladder_sum(neg, [-4, 4, 12]) == Fraction(5, 128)
    # the full expansion of -pi_{6,2}, constant term first
    assert neg.coeffs == tuple(
        Fraction(c) for c in ["-1/256", "-1/64", "-1/64", "1/64", "5/128", "1/64", "-1/64", "-1/64", "-1/256"]
    )


def test_circular_polynumber_examples():
    assert circular_polynumber(2, 2).coeffs == (Fraction(1, 16), 0, Fraction(-2, 16), 0, Fraction(1, 16))
    assert circular_polynumber(0, 0).coeffs == (1,)
    big = circular_polynumber(40, 24)
    assert big.k == 40 and big.l == 24 and big.degree == 64
    den = 2**64
    expected = {0: 1, 8: 90744, 16: -15156452, 24: -264053432, 32: 1650887238}
    for i, num in expected.items():
        assert big[i] == Fraction(num, den)
        assert big[64 - i] == Fraction(num, den)
    rungs = ladder_sum(big, range(0, 65, 8))
    assert rungs == Fraction(33345, 2**49)


def test_circular_polynumber_value_at_one():
    for k in range(6):
        for l in range(6):
            pi = circular_polynumber(k, l)
            assert pi.degree == k + l
            assert pi(Fraction(1)) == (1 if l == 0 else 0)


def test_circular_polynumber_by_binomial_sum():
    # independent route: the product of two binomial rows, term by term
    for k in range(9):
        for l in range(9):
            direct = [
                Fraction(sum(binomial(k, i - j) * binomial(l, j) * (-1) ** j for j in range(i + 1)), 2 ** (k + l))
                for i in range(k + l + 1)
            ]
            assert list(circular_polynumber(k, l).coeffs) == direct


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 24), st.integers(0, 24))
def test_reflection_and_swap_laws(k, l):
    pi, swapped = circular_polynumber(k, l), circular_polynumber(l, k)
    for i in range(k + l + 1):
        assert pi[i] == (-1) ** l * pi[k + l - i]
        assert pi[i] == (-1) ** i * swapped[i]


@pytest.mark.parametrize(
    "n, d, m, expected",
    [(3, 6, 2, -4), (0, 5, 3, 1), (0, 0, 0, 1), (2, 4, 1, 0)],
)
def test_krawtchouk_examples(n, d, m, expected):
    assert krawtchouk_value(n, d, m) == expected


def test_krawtchouk_domain():
    with pytest.raises(OutOfRange):
        krawtchouk_value(5, 4, 1)
    with pytest.raises(OutOfRange):
        krawtchouk_value(1, 4, 7)


def test_krawtchouk_generating_function():
    for d in range(21):
        for m in range(d + 1):
            gen = krawtchouk_generating(d, m)
            assert [gen[n] for n in range(d + 1)] == [krawtchouk_value(n, d, m) for n in range(d + 1)]


def test_krawtchouk_polynumber_interpolates_values():
    for d in range(9):
        for n in range(d + 1):
            poly = krawtchouk_polynumber(n, d)
            assert poly.degree is None or poly.degree <= n
            for m in range(d + 1):
                assert poly(Fraction(m)) == krawtchouk_value(n, d, m)


def test_delta_over_three_is_an_indicator():
    F = field_make(3)
    d = delta_polynumber((F(1), F(2)))
    grid = [[evaluate(d, (x, y)) for y in F.elements()] for x in F.elements()]
    assert grid == [[0, 0, 0], [0, 0, 1], [0, 0, 0]]


@pytest.mark.parametrize("p, r", [(3, 1), (5, 1), (3, 2)])
def test_delta_lies_in_principal_span(p, r):
    F = field_make(p, r)
    for a in F.elements()[:4]:
        for b in F.elements()[-3:]:
            d = delta_polynumber((a, b))
            rows, cols = d.shape
            assert rows <= F.q and cols <= F.q
            for x, y in itertools.product(F.elements(), repeat=2):
                assert evaluate(d, (x, y)) == (1 if (x, y) == (a, b) else 0)


def test_deltas_sum_to_one():
    F = field_make(7)
    total = Polynumber2((), F)
    for a, b in itertools.product(F.elements(), repeat=2):
        total = total + delta_polynumber((a, b))
    assert total == Polynumber2.constant(1, F)


def test_substitution_by_identity():
    F = field_make(5)
    pi = _random_poly(random.Random(1), F)
    assert substitute_linear(pi, [[1, 0], [0, 1]]) == pi


def test_substitution_by_quarter_turn():
    F = field_make(5)
    h = [[0, 1], [-1, 0]]
    # alpha -> h11 alpha + h21 beta = -beta
    assert substitute_linear(Polynumber2.alpha(F), h) == -Polynumber2.beta(F)
    pi = _random_poly(random.Random(2), F)
    moved = substitute_linear(pi, h)
    for x, y in itertools.product(F.elements(), repeat=2):
        # [x, y] h = [-y, x]
        assert evaluate(moved, (x, y)) == evaluate(pi, (-y, x))


def test_substitution_composes():
    F = field_make(13)
    rng = random.Random(3)

    def rotation():
        x, y = F(rng.randrange(13)), F(rng.randrange(13))
        return [[x, y], [-y, x]]

    def matmul(h, g):
        return [[sum((h[i][t] * g[t][j] for t in range(2)), F.zero) for j in range(2)] for i in range(2)]

    for _ in range(5):
        h, g = rotation(), rotation()
        pi = _random_poly(rng, F, deg=2)
        assert substitute_linear(pi, matmul(h, g)) == substitute_linear(substitute_linear(pi, g), h)


def test_substitution_field_mismatch():
    with pytest.raises(SpecMismatch):
        substitute_linear(Polynumber2.alpha(field_make(5)), [[field_make(7)(1), 0], [0, 1]])


def test_json_roundtrip():
    pi = Polynumber([Fraction(1, 2), 0, Fraction(-3, 4)])
    assert pi.to_json() == ["1/2", "0", "-3/4"]
    assert Polynumber.from_json(pi.to_json()) == pi
    F = field_make(3, 2)
    g = Polynumber2([[F([1, 2]), 0], [0, F([0, 1])]], F)
    obj = g.to_json()
    assert obj["rows"] == 2 and obj["cols"] == 2
    assert obj["grid"][0][0] == {"coeffs": [1, 2]}
    assert Polynumber2.from_json(obj, F) == g
