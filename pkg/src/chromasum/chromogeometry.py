"""Blue, red and green planar geometry over a finite field.

Points are :class:`AffinePoint` pairs.  The three unit circles are

    blue   x^2 + y^2 = 1
    red    x^2 - y^2 = 1
    green  x y = 1

and each is a cyclic group, realized here as a group of 2x2 rotation
matrices (:class:`Dihedron` values) acting on row vectors from the right.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

from .finite_field import FieldElement, FieldSpec, SpecMismatch, field_make

__all__ = [
    "Color",
    "Dihedron",
    "AffinePoint",
    "UnitCircle",
    "NotOnCircle",
    "quadratic_form",
    "on_circle",
    "circle_size",
    "circle_enumerate",
    "circle_parametrize",
    "quadrance",
    "form_matrix",
    "rotation_matrix",
    "rotation_matrices",
    "base_point",
    "act",
    "circle_group_law",
    "point_order",
    "cyclic_generator",
    "red_to_green",
    "green_to_red",
    "blue_extension_field",
]


class NotOnCircle(ValueError):
    pass


class Color(enum.Enum):
    GREEN = "green"
    RED = "red"
    BLUE = "blue"

    @classmethod
    def parse(cls, value) -> Color:
        if isinstance(value, Color):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown color {value!r}; expected green, red or blue") from None

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Dihedron:
    """The 2x2 matrix [[a, b], [c, d]] over a finite field."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    def __post_init__(self):
        spec = self.a.spec
        if any(e.spec != spec for e in (self.b, self.c, self.d)):
            raise SpecMismatch("dihedron entries from different fields")

    @property
    def spec(self) -> FieldSpec:
        return self.a.spec

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows) -> Dihedron:
        (a, b), (c, d) = rows
        return cls(spec(a), spec(b), spec(c), spec(d))

    @classmethod
    def identity(cls, spec):
        return cls.from_rows(spec, [[1, 0], [0, 1]])

    @classmethod
    def i(cls, spec):
        return cls.from_rows(spec, [[0, 1], [-1, 0]])

    @classmethod
    def j(cls, spec):
        return cls.from_rows(spec, [[0, 1], [1, 0]])

    @classmethod
    def k(cls, spec):
        return cls.from_rows(spec, [[1, 0], [0, -1]])

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def __iter__(self):
        return iter(self.rows())

    def __add__(self, other: Dihedron) -> Dihedron:
        return Dihedron(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: Dihedron) -> Dihedron:
        return Dihedron(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __mul__(self, other):
        if isinstance(other, Dihedron):
            return Dihedron(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        return Dihedron(self.a * other, self.b * other, self.c * other, self.d * other)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int) -> Dihedron:
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Dihedron.identity(self.spec), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def adjugate(self) -> Dihedron:
        return Dihedron(self.d, -self.b, -self.c, self.a)

    def det(self) -> FieldElement:
        return self.a * self.d - self.b * self.c

    def transpose(self) -> Dihedron:
        return Dihedron(self.a, self.c, self.b, self.d)

    def inverse(self) -> Dihedron:
        return self.adjugate() * self.det().inverse()

    def to_json(self):
        return [[e.to_json() for e in row] for row in self.rows()]


@dataclass(frozen=True)
class AffinePoint:
    x: FieldElement
    y: FieldElement

    def __post_init__(self):
        if self.x.spec != self.y.spec:
            raise SpecMismatch("point coordinates from different fields")

    @property
    def spec(self) -> FieldSpec:
        return self.x.spec

    @classmethod
    def of(cls, spec: FieldSpec, x, y) -> AffinePoint:
        return cls(spec(x), spec(y))

    def __iter__(self):
        return iter((self.x, self.y))

    def sort_key(self):
        return (self.x.coeffs, self.y.coeffs)

    def to_json(self) -> dict:
        return {"x": self.x.to_json(), "y": self.y.to_json()}

    def __str__(self):
        return f"[{self.x},{self.y}]"


@dataclass(frozen=True)
class UnitCircle:
    color: Color
    spec: FieldSpec
    points: tuple[AffinePoint, ...]

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, pt):
        return pt in self._point_set

    @functools.cached_property
    def _point_set(self):
        return frozenset(self.points)

    def to_json(self):
        return [pt.to_json() for pt in self.points]


def quadratic_form(color, x, y) -> FieldElement:
    color = Color.parse(color)
    if color is Color.BLUE:
        return x * x + y * y
    if color is Color.RED:
        return x * x - y * y
    return x * y


def on_circle(color, pt: AffinePoint) -> bool:
    return quadratic_form(color, pt.x, pt.y) == 1


def circle_size(color, spec: FieldSpec) -> int:
    """q - 1 for green and red, q - (-1/q) for blue."""
    if Color.parse(color) is Color.BLUE:
        return spec.q - spec.jacobi_minus_one()
    return spec.q - 1


def _sorted_circle(color, spec, points):
    return UnitCircle(color, spec, tuple(sorted(points, key=AffinePoint.sort_key)))


@functools.lru_cache(maxsize=256)
def circle_enumerate(color, spec: FieldSpec) -> UnitCircle:
    """All points of the unit circle, by solving for y at each x."""
    color = Color.parse(color)
    pts = []
    if color is Color.GREEN:
        pts = [AffinePoint(x, x.inverse()) for x in spec.nonzero_elements()]
    else:
        sign = 1 if color is Color.RED else -1
        for x in spec.elements():
            # red: y^2 = x^2 - 1, blue: y^2 = 1 - x^2
            rhs = (x * x - 1) * sign
            pts.extend(AffinePoint(x, y) for y in spec.sqrt(rhs))
    return _sorted_circle(color, spec, pts)


def circle_parametrize(color, spec: FieldSpec) -> UnitCircle:
    """The circle from its rational parametrization, plus the point [-1, 0].

    Unlike :func:`circle_enumerate` the points are produced one per parameter
    value and are not deduplicated, so the size is a genuine check.
    """
    color = Color.parse(color)
    if color is Color.GREEN:
        pts = [AffinePoint(t, t.inverse()) for t in spec.nonzero_elements()]
        return _sorted_circle(color, spec, pts)
    pts = [AffinePoint(-spec.one, spec.zero)]
    for t in spec.elements():
        t2 = t * t
        if color is Color.RED:
            den = 1 - t2
            if den:
                pts.append(AffinePoint((1 + t2) / den, (t + t) / den))
        else:
            den = 1 + t2
            if den:
                pts.append(AffinePoint((1 - t2) / den, (t + t) / den))
    return _sorted_circle(color, spec, pts)


def quadrance(h: Dihedron) -> FieldElement:
    return h.det()


def form_matrix(color, spec: FieldSpec) -> Dihedron:
    color = Color.parse(color)
    if color is Color.BLUE:
        return Dihedron.identity(spec)
    if color is Color.RED:
        return Dihedron.k(spec)
    half = spec(2).inverse()
    return Dihedron(spec.zero, half, half, spec.zero)


def rotation_matrix(color, pt: AffinePoint) -> Dihedron:
    """The matrix that carries the base point to ``pt``."""
    color = Color.parse(color)
    x, y = pt.x, pt.y
    if color is Color.BLUE:
        return Dihedron(x, y, -y, x)
    if color is Color.RED:
        return Dihedron(x, y, y, x)
    return Dihedron(x, x.spec.zero, x.spec.zero, y)


def rotation_matrices(color, spec: FieldSpec) -> list[Dihedron]:
    return [rotation_matrix(color, pt) for pt in circle_enumerate(color, spec)]


def base_point(color, spec: FieldSpec) -> AffinePoint:
    if Color.parse(color) is Color.GREEN:
        return AffinePoint(spec.one, spec.one)
    return AffinePoint(spec.one, spec.zero)


def act(pt: AffinePoint, h: Dihedron) -> AffinePoint:
    """Row vector times matrix: [x, y] h."""
    return AffinePoint(h.a * pt.x + h.c * pt.y, h.b * pt.x + h.d * pt.y)


def circle_group_law(color, a: AffinePoint, b: AffinePoint) -> AffinePoint:
    color = Color.parse(color)
    for pt in (a, b):
        if not on_circle(color, pt):
            raise NotOnCircle(f"{pt} is not on the {color} unit circle")
    return act(a, rotation_matrix(color, b))


def point_order(color, pt: AffinePoint) -> int:
    color = Color.parse(color)
    e = base_point(color, pt.spec)
    cur, n = pt, 1
    while cur != e:
        cur = circle_group_law(color, cur, pt)
        n += 1
    return n


def cyclic_generator(color, spec: FieldSpec) -> AffinePoint | None:
    """First circle point (canonical order) whose order is the circle size."""
    n = circle_size(color, spec)
    for pt in circle_enumerate(color, spec):
        if point_order(color, pt) == n:
            return pt
    return None


def red_to_green(pt: AffinePoint) -> AffinePoint:
    return AffinePoint(pt.x + pt.y, pt.x - pt.y)


def green_to_red(pt: AffinePoint) -> AffinePoint:
    half = pt.spec(2).inverse()
    return AffinePoint((pt.x + pt.y) * half, (pt.x - pt.y) * half)


def blue_extension_field(spec: FieldSpec):
    """F_p[X]/(X^2 + 1) with the embedding [x, y] -> x + yX, for prime q = 3 mod 4.

    Other fields use the dihedron powers directly.
    """
    if spec.r != 1 or spec.jacobi_minus_one() != -1:
        raise ValueError("the blue extension is built only for prime q with -1 a non-square")
    ext = field_make(spec.p, 2, [1, 0, 1])

    def embed(pt: AffinePoint) -> FieldElement:
        return ext([int(pt.x), int(pt.y)])

    return ext, embed
