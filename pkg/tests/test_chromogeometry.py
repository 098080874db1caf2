import itertools
import random

import pytest

from chromasum.chromogeometry import (
    AffinePoint,
    Color,
    Dihedron,
    NotOnCircle,
    act,
    base_point,
    blue_extension_field,
    circle_enumerate,
    circle_group_law,
    circle_parametrize,
    circle_size,
    cyclic_generator,
    form_matrix,
    green_to_red,
    on_circle,
    point_order,
    quadrance,
    red_to_green,
    rotation_matrices,
    rotation_matrix,
)
from chromasum.finite_field import field_make

FIELDS = [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (17, 1), (5, 2), (3, 3)]


def _scan(color, spec):
    return {
        AffinePoint(x, y)
        for x, y in itertools.product(spec.elements(), repeat=2)
        if on_circle(color, AffinePoint(x, y))
    }


def _pts(spec, pairs):
    return {AffinePoint(spec(list(x) if isinstance(x, tuple) else x), spec(list(y) if isinstance(y, tuple) else y))
            for x, y in pairs}


@pytest.mark.parametrize("p, r", [(3, 1), (5, 1), (7, 1), (13, 1), (3, 2), (5, 2), (7, 2), (3, 3)])
def test_dihedron_basis_relations(p, r):
    F = field_make(p, r)
    one, i, j, k = Dihedron.identity(F), Dihedron.i(F), Dihedron.j(F), Dihedron.k(F)
    assert i * i == one * -1
    assert j * j == one
    assert k * k == one
    assert i * j == k
    for h in (i, j, k, Dihedron.from_rows(F, [[1, 2], [0, 1]])):
        assert h.adjugate().adjugate() == h
        assert h * h.adjugate() == one * h.det()
        assert h.adjugate() * h == one * h.det()


def test_quadrance():
    F = field_make(13)
    assert quadrance(Dihedron.identity(F)) == 1
    rng = random.Random(0)
    for _ in range(50):
        x, y = F(rng.randrange(13)), F(rng.randrange(13))
        assert quadrance(Dihedron.identity(F) * x + Dihedron.i(F) * y) == x * x + y * y
        h1, h2 = (Dihedron.from_rows(F, [[rng.randrange(13) for _ in range(2)] for _ in range(2)]) for _ in range(2))
        assert quadrance(h1 * h2) == quadrance(h1) * quadrance(h2)


def test_blue_thirteen_listing():
    F = field_make(13)
    listed = _pts(F, [(1, 0), (12, 0), (0, 1), (0, 12), (2, 6), (2, 7), (11, 6), (11, 7),
                      (6, 2), (7, 2), (6, 11), (7, 11)])
    assert set(circle_enumerate("blue", F)) == listed


def test_red_seventeen_listing():
    F = field_make(17)
    listed = _pts(F, [(1, 0), (16, 0), (6, 1), (6, 16), (11, 1), (11, 16), (3, 5), (3, 12),
                      (14, 5), (14, 12), (4, 7), (4, 10), (13, 7), (13, 10), (0, 4), (0, 13)])
    circle = circle_enumerate("red", F)
    assert len(circle) == 16 and set(circle) == listed


def test_blue_seven_listing():
    F = field_make(7)
    # the printed list repeats [0,1]; [0,6] is the missing point
    listed = _pts(F, [(1, 0), (6, 0), (0, 1), (0, 6), (2, 2), (5, 5), (2, 5), (5, 2)])
    assert set(circle_enumerate("blue", F)) == listed
    assert set(circle_parametrize("blue", F)) == listed


def test_blue_twenty_seven_listing():
    F = field_make(3, 3, [1, 1, 0, -1])
    a0, a2, a12, a21 = (0, 0, 1), (0, 0, 2), (0, 1, 2), (0, 2, 1)
    listed = _pts(F, [
        (1, 0), (2, 0), (0, 1), (0, 2),
        (a0, a21), (a0, a12), (a2, a21), (a2, a12), (a21, a0), (a12, a0), (a21, a2), (a12, a2),
        ((2, 0, 1), (1, 1, 1)), ((2, 0, 1), (2, 2, 2)), ((0, 2, 2), (1, 2, 1)),
        ((1, 0, 2), (2, 2, 2)), ((1, 0, 2), (1, 1, 1)), ((1, 1, 1), (2, 0, 1)),
        ((2, 2, 2), (2, 0, 1)), ((1, 1, 1), (1, 0, 2)), ((0, 1, 1), (1, 2, 1)),
        ((0, 1, 1), (2, 1, 2)), ((0, 2, 2), (2, 1, 2)), ((1, 2, 1), (0, 1, 1)),
        ((2, 1, 2), (0, 1, 1)), ((2, 2, 2), (1, 0, 2)), ((1, 2, 1), (0, 2, 2)),
        ((2, 1, 2), (0, 2, 2)),
    ])
    assert len(listed) == 28
    assert set(circle_enumerate("blue", F)) == listed


def test_green_five():
    F = field_make(5)
    assert set(circle_enumerate("green", F)) == {AffinePoint(t, t.inverse()) for t in F.nonzero_elements()}


@pytest.mark.parametrize("p, r", FIELDS)
@pytest.mark.parametrize("color", list(Color))
def test_enumeration_matches_scan_and_parametrization(color, p, r):
    F = field_make(p, r)
    enum = circle_enumerate(color, F)
    par = circle_parametrize(color, F)
    assert len(enum) == len(par) == circle_size(color, F)
    assert set(enum) == set(par) == _scan(color, F)
    assert list(enum.points) == sorted(enum.points, key=AffinePoint.sort_key)


@pytest.mark.parametrize("p, r", FIELDS)
def test_circle_sizes(p, r):
    F = field_make(p, r)
    minus_one_square = any(x * x == -1 for x in F.elements())
    assert len(circle_enumerate("green", F)) == F.q - 1
    assert len(circle_enumerate("red", F)) == F.q - 1
    assert len(circle_enumerate("blue", F)) == (F.q - 1 if minus_one_square else F.q + 1)


@pytest.mark.parametrize("p, r", FIELDS)
@pytest.mark.parametrize("color", list(Color))
def test_rotations_preserve_the_form(color, p, r):
    F = field_make(p, r)
    M = form_matrix(color, F)
    mats = rotation_matrices(color, F)
    assert len(mats) == circle_size(color, F)
    for h in mats:
        assert h * M * h.transpose() == M
        assert h.det() == 1
    group = set(mats)
    for h, g in itertools.product(mats, repeat=2):
        assert h * g in group


@pytest.mark.parametrize("p, r", FIELDS)
@pytest.mark.parametrize("color", list(Color))
def test_rotation_orbit_is_the_circle(color, p, r):
    F = field_make(p, r)
    e = base_point(color, F)
    orbit = [act(e, h) for h in rotation_matrices(color, F)]
    assert len(set(orbit)) == len(orbit)
    assert set(orbit) == set(circle_enumerate(color, F))


def test_green_rotations_are_diagonal():
    F = field_make(7)
    assert {(h.a, h.d) for h in rotation_matrices("green", F)} == {(t, t.inverse()) for t in F.nonzero_elements()}
    assert all(h.b == 0 and h.c == 0 for h in rotation_matrices("green", F))


def test_group_law_examples():
    F = field_make(13)
    i = AffinePoint(F(0), F(1))
    assert circle_group_law("blue", i, i) == AffinePoint(F(-1), F(0))
    t, u = F(3), F(5)
    assert circle_group_law("green", AffinePoint(t, 1 / t), AffinePoint(u, 1 / u)) == AffinePoint(t * u, 1 / (t * u))
    with pytest.raises(NotOnCircle):
        circle_group_law("red", AffinePoint(F(2), F(2)), i)


@pytest.mark.parametrize("p, r", FIELDS)
@pytest.mark.parametrize("color", list(Color))
def test_group_law_closed_and_commutative(color, p, r):
    F = field_make(p, r)
    circle = circle_enumerate(color, F)
    for a, b in itertools.product(circle.points[:6], circle.points):
        c = circle_group_law(color, a, b)
        assert c in circle
        assert c == circle_group_law(color, b, a)


@pytest.mark.parametrize("p, r", [(3, 1), (5, 1), (7, 1), (3, 2), (13, 1), (17, 1), (5, 2), (3, 3)])
@pytest.mark.parametrize("color", list(Color))
def test_circles_are_cyclic(color, p, r):
    F = field_make(p, r)
    g = cyclic_generator(color, F)
    assert g is not None
    assert point_order(color, g) == circle_size(color, F)


def test_red_seventeen_orbit():
    F = field_make(17)
    assert point_order("red", cyclic_generator("red", F)) == 16


def test_red_green_correspondence():
    F = field_make(11)
    reds = circle_enumerate("red", F)
    greens = {red_to_green(pt) for pt in reds}
    assert greens == set(circle_enumerate("green", F))
    assert all(green_to_red(red_to_green(pt)) == pt for pt in reds)


def _power_sum_table(elements, one, n, top):
    # sum of t^k over the group, for k = 0..top
    out = []
    powers = [one for _ in elements]
    for k in range(top + 1):
        total = powers[0] * 0
        for x in powers:
            total = total + x
        out.append(total)
        powers = [x * t for x, t in zip(powers, elements)]
    return out


def test_power_sums_in_multiplicative_groups():
    # every field F_q with q - 1 <= 28
    for p, r in [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (5, 2), (3, 3), (29, 1)]:
        F = field_make(p, r)
        n = F.q - 1
        sums = _power_sum_table(F.nonzero_elements(), F.one, n, 3 * n)
        for k, s in enumerate(sums):
            assert s == (F(n) if k % n == 0 else F.zero), (F, k)


def test_power_sums_on_blue_circle_in_dihedrons():
    # blue circles of order q + 1 <= 28, as rotation matrices
    for p, r in [(3, 1), (7, 1), (11, 1), (19, 1), (23, 1), (3, 3)]:
        F = field_make(p, r)
        n = F.q + 1
        mats = rotation_matrices("blue", F)
        assert len(mats) == n
        sums = _power_sum_table(mats, Dihedron.identity(F), n, 3 * n)
        for k, s in enumerate(sums):
            expected = Dihedron.identity(F) * n if k % n == 0 else Dihedron.identity(F) * 0
            assert s == expected, (F, k)


@pytest.mark.parametrize("p", [3, 7, 11, 19, 23])
def test_blue_circle_as_norm_one_elements(p):
    F = field_make(p)
    ext, embed = blue_extension_field(F)
    images = [embed(pt) for pt in circle_enumerate("blue", F)]
    assert len(set(images)) == p + 1
    # norm-one elements of F_{p^2} are exactly those with z^(p+1) = 1
    assert set(images) == {z for z in ext.nonzero_elements() if z ** (p + 1) == 1}
    circle = circle_enumerate("blue", F)
    for a, b in itertools.product(circle.points[:4], circle.points):
        assert embed(circle_group_law("blue", a, b)) == embed(a) * embed(b)
    n = p + 1
    for k in range(3 * n + 1):
        total = ext.zero
        for z in images:
            total = total + z**k
        assert total == (ext(n) if k % n == 0 else ext.zero)


def test_blue_extension_needs_nonsquare():
    with pytest.raises(ValueError):
        blue_extension_field(field_make(13))
