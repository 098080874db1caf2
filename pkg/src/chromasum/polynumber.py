"""Dense polynumbers in one and two variables.

A polynumber is just its coefficient array: index ``i`` of a
:class:`Polynumber` is the coefficient of alpha^i and entry ``(i, j)`` of a
:class:`Polynumber2` the coefficient of alpha^i beta^j.  Coefficients live in
one of two rings, the rationals (:data:`QQ`, backed by ``Fraction``) or a
finite field (a :class:`~chromasum.finite_field.FieldSpec`).
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .arith import binomial, format_rational, parse_rational
from .finite_field import FieldElement, FieldSpec, SpecMismatch

__all__ = [
    "QQ",
    "RingMismatch",
    "OutOfRange",
    "Polynumber",
    "Polynumber2",
    "CircularPolynumber",
    "cauchy_mul",
    "evaluate",
    "coefficient_at",
    "ladder_sum",
    "circular_polynumber",
    "krawtchouk_value",
    "krawtchouk_generating",
    "krawtchouk_polynumber",
    "delta_polynumber",
    "substitute_linear",
]


class RingMismatch(TypeError):
    pass


class OutOfRange(ValueError):
    pass


class RationalRing:
    """The rationals as a coefficient ring."""

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, FieldElement):
            raise RingMismatch("field element used as a rational coefficient")
        return Fraction(x)

    def encode(self, x) -> str:
        return format_rational(x)

    def decode(self, obj) -> Fraction:
        return parse_rational(obj) if isinstance(obj, str) else Fraction(obj)

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return "QQ"


QQ = RationalRing()


def _encode(ring, c):
    if ring is QQ:
        return QQ.encode(c)
    return c.to_json()


def _decode(ring, obj):
    if ring is QQ:
        return QQ.decode(obj)
    return FieldElement.from_json(ring, obj)


def _check_ring(a, b):
    if a.ring is not b.ring and a.ring != b.ring:
        raise RingMismatch(f"cannot combine polynumbers over {a.ring} and {b.ring}")


class Polynumber:
    """Finite coefficient list ``[u_0, u_1, ..., u_k]``, trailing zeros dropped."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, coeffs=(), ring=QQ):
        cs = [ring(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs, ring):
        obj = Polynumber.__new__(Polynumber)
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        obj.ring = ring
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def alpha(cls, ring=QQ):
        return cls([ring.zero, ring.one], ring)

    @classmethod
    def constant(cls, c, ring=QQ):
        return cls([c], ring)

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynumber."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def __getitem__(self, n: int):
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return self.ring.zero

    def _coerce(self, other):
        if isinstance(other, Polynumber):
            _check_ring(self, other)
            return other
        if isinstance(other, Polynumber2):
            return NotImplemented
        try:
            return Polynumber([other], self.ring)
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynumber._raw((self[i] + other[i] for i in range(n)), self.ring)

    __radd__ = __add__

    def __neg__(self):
        return Polynumber._raw((-c for c in self.coeffs), self.ring)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynumber._raw(_convolve(self.coeffs, other.coeffs, self.ring.zero), self.ring)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers of polynumbers are not defined")
        result = Polynumber([self.ring.one], self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynumber):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        """Horner evaluation at a ring element."""
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self):
        return [_encode(self.ring, c) for c in self.coeffs]

    @classmethod
    def from_json(cls, obj, ring=QQ):
        return cls([_decode(ring, c) for c in obj], ring)

    def __repr__(self):
        return f"Polynumber({[str(c) for c in self.coeffs]}, ring={self.ring!r})"


def _convolve(a, b, zero):
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


class CircularPolynumber(Polynumber):
    """((1+alpha)/2)^k ((1-alpha)/2)^l over the rationals."""

    __slots__ = ("k", "l")

    def __repr__(self):
        return f"CircularPolynumber(k={self.k}, l={self.l}, degree={self.degree})"


class Polynumber2:
    """Rectangular grid of coefficients; ``grid[i][j]`` multiplies alpha^i beta^j.

    Trailing all-zero rows and columns are trimmed, so the zero polynumber is
    the empty grid.
    """

    __slots__ = ("ring", "grid")

    def __init__(self, grid=(), ring=QQ):
        self.ring = ring
        self.grid = _trim_grid([[ring(c) for c in row] for row in grid], ring.zero)

    @classmethod
    def _raw(cls, grid, ring):
        obj = Polynumber2.__new__(Polynumber2)
        obj.ring = ring
        obj.grid = _trim_grid(grid, ring.zero)
        return obj

    @classmethod
    def monomial(cls, i: int, j: int, ring=QQ, coeff=None):
        c = ring.one if coeff is None else ring(coeff)
        grid = [[ring.zero] * (j + 1) for _ in range(i + 1)]
        grid[i][j] = c
        return cls._raw(grid, ring)

    @classmethod
    def alpha(cls, ring=QQ):
        return cls.monomial(1, 0, ring)

    @classmethod
    def beta(cls, ring=QQ):
        return cls.monomial(0, 1, ring)

    @classmethod
    def constant(cls, c, ring=QQ):
        return cls([[c]], ring)

    @classmethod
    def from_terms(cls, terms, ring=QQ):
        """Build from ``{(i, j): coeff}``."""
        terms = {ij: ring(c) for ij, c in dict(terms).items()}
        if not terms:
            return cls((), ring)
        rows = max(i for i, _ in terms) + 1
        cols = max(j for _, j in terms) + 1
        grid = [[ring.zero] * cols for _ in range(rows)]
        for (i, j), c in terms.items():
            grid[i][j] = grid[i][j] + c
        return cls._raw(grid, ring)

    @classmethod
    def outer(cls, a: Polynumber, b: Polynumber):
        """a(alpha) * b(beta)."""
        if a.ring != b.ring:
            raise RingMismatch("outer product of polynumbers over different rings")
        grid = [[x * y for y in b.coeffs] for x in a.coeffs]
        return cls._raw(grid, a.ring)

    @classmethod
    def from_polynumber(cls, a: Polynumber, var: str = "alpha"):
        if var == "alpha":
            return cls._raw([[c] for c in a.coeffs], a.ring)
        if var == "beta":
            return cls._raw([list(a.coeffs)], a.ring)
        raise ValueError(f"unknown variable {var!r}")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.grid), len(self.grid[0]) if self.grid else 0)

    def __getitem__(self, ij):
        i, j = ij
        if 0 <= i < len(self.grid) and 0 <= j < len(self.grid[i]):
            return self.grid[i][j]
        return self.ring.zero

    def terms(self):
        """Nonzero ``(i, j, coeff)`` triples in row-major order."""
        for i, row in enumerate(self.grid):
            for j, c in enumerate(row):
                if c:
                    yield i, j, c

    def is_zero(self) -> bool:
        return not self.grid

    def _coerce(self, other):
        if isinstance(other, Polynumber2):
            _check_ring(self, other)
            return other
        if isinstance(other, Polynumber):
            _check_ring(self, other)
            return Polynumber2.from_polynumber(other)
        try:
            return Polynumber2([[other]], self.ring)
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        rows = max(self.shape[0], other.shape[0])
        cols = max(self.shape[1], other.shape[1])
        grid = [[self[i, j] + other[i, j] for j in range(cols)] for i in range(rows)]
        return Polynumber2._raw(grid, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return Polynumber2._raw([[-c for c in row] for row in self.grid], self.ring)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return Polynumber2((), self.ring)
        rows = self.shape[0] + other.shape[0] - 1
        cols = self.shape[1] + other.shape[1] - 1
        zero = self.ring.zero
        grid = [[zero] * cols for _ in range(rows)]
        right = list(other.terms())
        for i, j, a in self.terms():
            for s, t, b in right:
                grid[i + s][j + t] = grid[i + s][j + t] + a * b
        return Polynumber2._raw(grid, self.ring)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers of polynumbers are not defined")
        result = Polynumber2.constant(self.ring.one, self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c):
        c = self.ring(c)
        return Polynumber2._raw([[c * x for x in row] for row in self.grid], self.ring)

    def __eq__(self, other):
        if isinstance(other, Polynumber2):
            return self.ring == other.ring and self.grid == other.grid
        return NotImplemented

    def __hash__(self):
        return hash(self.grid)

    def to_json(self) -> dict:
        rows, cols = self.shape
        return {
            "rows": rows,
            "cols": cols,
            "grid": [[_encode(self.ring, c) for c in row] for row in self.grid],
        }

    @classmethod
    def from_json(cls, obj, ring=QQ):
        grid = obj["grid"] if isinstance(obj, dict) else obj
        return cls([[_decode(ring, c) for c in row] for row in grid], ring)

    def __repr__(self):
        body = " + ".join(f"{c}*a^{i}b^{j}" for i, j, c in self.terms()) or "0"
        return f"Polynumber2({body}, ring={self.ring!r})"


def _trim_grid(grid, zero):
    grid = [list(row) for row in grid]
    while grid and not any(grid[-1]):
        grid.pop()
    if not grid:
        return ()
    cols = max(len(row) for row in grid)
    for row in grid:
        row.extend([zero] * (cols - len(row)))
    while cols and not any(row[cols - 1] for row in grid):
        cols -= 1
    return tuple(tuple(row[:cols]) for row in grid)


# -- operations --------------------------------------------------------------


def cauchy_mul(a, b):
    """Cauchy product of two polynumbers of the same kind and ring."""
    _check_ring(a, b)
    return a * b


def _point_xy(point):
    if hasattr(point, "x") and hasattr(point, "y"):
        return point.x, point.y
    x, y = point
    return x, y


def evaluate(pi: Polynumber2, point) -> FieldElement:
    """Value of ``pi`` at the affine point ``[x, y]`` (with 0^0 = 1)."""
    x, y = _point_xy(point)
    ring = pi.ring
    if not isinstance(ring, FieldSpec):
        raise RingMismatch("evaluation at affine points needs field coefficients")
    if x.spec != ring or y.spec != ring:
        raise SpecMismatch(f"point over {x.spec} but polynumber over {ring}")
    rows, cols = pi.shape
    xs = _powers(x, rows)
    ys = _powers(y, cols)
    acc = ring.zero
    for i, j, c in pi.terms():
        acc = acc + c * xs[i] * ys[j]
    return acc


def _powers(x, n):
    out = []
    cur = x.spec.one
    for _ in range(n):
        out.append(cur)
        cur = cur * x
    return out


def coefficient_at(pi: Polynumber, n: int):
    """[alpha^n] pi, zero outside the stored range."""
    return pi[n]


def ladder_sum(pi: Polynumber, indices):
    """Sum of [alpha^i] pi over ``indices``; indices outside the support add zero."""
    acc = pi.ring.zero
    for i in indices:
        acc = acc + pi[i]
    return acc


def _int_pow(base: list[int], e: int) -> list[int]:
    result, b = [1], base
    while e:
        if e & 1:
            result = _convolve(result, b, 0)
        b = _convolve(b, b, 0)
        e >>= 1
    return result


@functools.lru_cache(maxsize=8192)
def circular_polynumber(k: int, l: int) -> CircularPolynumber:
    """((1+alpha)/2)^k ((1-alpha)/2)^l with exact rational coefficients.

    The integer polynumber (1+alpha)^k (1-alpha)^l is formed by repeated
    squaring and then scaled by 2^-(k+l).
    """
    if k < 0 or l < 0:
        raise OutOfRange("circular polynumbers need k, l >= 0")
    num = _convolve(_int_pow([1, 1], k), _int_pow([1, -1], l), 0)
    den = 1 << (k + l)
    obj = CircularPolynumber.__new__(CircularPolynumber)
    cs = [Fraction(c, den) for c in num]
    while cs and not cs[-1]:
        cs.pop()
    obj.ring = QQ
    obj.coeffs = tuple(cs)
    obj.k = k
    obj.l = l
    return obj


def krawtchouk_value(n: int, d: int, m: int) -> int:
    """k_n^(d)(m) = sum_j (-1)^j C(m, j) C(d-m, n-j)."""
    if not (0 <= n <= d and 0 <= m <= d):
        raise OutOfRange(f"need 0 <= n, m <= d, got n={n}, d={d}, m={m}")
    return sum((-1) ** j * binomial(m, j) * binomial(d - m, n - j) for j in range(n + 1))


def krawtchouk_generating(d: int, m: int) -> Polynumber:
    """(1 - alpha)^m (1 + alpha)^(d-m), whose alpha^n coefficient is k_n^(d)(m)."""
    if not 0 <= m <= d:
        raise OutOfRange(f"need 0 <= m <= d, got d={d}, m={m}")
    return Polynumber(_convolve(_int_pow([1, -1], m), _int_pow([1, 1], d - m), 0))


def _binomial_polynumber(pi: Polynumber, l: int) -> Polynumber:
    # pi (pi - 1) ... (pi - l + 1) / l!
    out = Polynumber([1])
    for s in range(l):
        out = out * (pi - s)
    return out * Fraction(1, _factorial(l))


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def krawtchouk_polynumber(n: int, d: int) -> Polynumber:
    """k_n^(d) as a rational polynumber in alpha; its value at m is k_n^(d)(m)."""
    if not 0 <= n <= d:
        raise OutOfRange(f"need 0 <= n <= d, got n={n}, d={d}")
    a = Polynumber.alpha()
    total = Polynumber()
    for j in range(n + 1):
        total = total + (-1) ** j * _binomial_polynumber(a, j) * _binomial_polynumber(d - a, n - j)
    return total


def delta_polynumber(point) -> Polynumber2:
    """The polynumber in the principal span whose evaluation is the indicator of ``point``.

    Built as prod_{t != a}(t - alpha) prod_{u != b}(u - beta), divided by the
    value of the same product at (a, b).
    """
    a, b = _point_xy(point)
    spec = a.spec
    if b.spec != spec:
        raise SpecMismatch("point coordinates from different fields")
    alpha = Polynumber.alpha(spec)
    left = Polynumber([spec.one], spec)
    right = Polynumber([spec.one], spec)
    for t in spec.elements():
        if t != a:
            left = left * (t - alpha)
        if t != b:
            right = right * (t - alpha)
    norm = left(a) * right(b)
    return Polynumber2.outer(left, right).scale(norm.inverse())


def _matrix_entries(h):
    if all(hasattr(h, name) for name in "abcd"):
        return h.a, h.b, h.c, h.d
    (h11, h12), (h21, h22) = h
    return h11, h12, h21, h22


def substitute_linear(pi: Polynumber2, h) -> Polynumber2:
    """Left action h . pi = pi(h11 alpha + h21 beta, h12 alpha + h22 beta)."""
    h11, h12, h21, h22 = (pi.ring(x) for x in _matrix_entries(h))
    ring = pi.ring
    if pi.is_zero():
        return pi
    u = Polynumber2.from_terms({(1, 0): h11, (0, 1): h21}, ring)
    v = Polynumber2.from_terms({(1, 0): h12, (0, 1): h22}, ring)
    rows, cols = pi.shape
    upow = [Polynumber2.constant(ring.one, ring)]
    for _ in range(rows - 1):
        upow.append(upow[-1] * u)
    vpow = [Polynumber2.constant(ring.one, ring)]
    for _ in range(cols - 1):
        vpow.append(vpow[-1] * v)
    total = Polynumber2((), ring)
    for i, j, c in pi.terms():
        total = total + (upow[i] * vpow[j]).scale(c)
    return total
