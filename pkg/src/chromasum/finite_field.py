"""Finite fields F_q = F_p[X]/(f) of odd characteristic.

A :class:`FieldSpec` fixes p, the degree r and a monic irreducible modulus f
(coefficients listed constant term first).  Its elements are
:class:`FieldElement` values; internally an element is the integer
``c_0 + c_1 p + ... + c_{r-1} p^{r-1}`` built from its coefficient vector,
and multiplication in extension fields goes through exp/log tables built on
first use from a multiplicative generator.
"""

from __future__ import annotations

import functools
import itertools
import os
import re

__all__ = [
    "DEFAULT_Q_CEILING",
    "FieldError",
    "NotPrime",
    "NotIrreducible",
    "EvenCharacteristic",
    "FieldTooLarge",
    "SpecMismatch",
    "FieldSpec",
    "FieldElement",
    "field_make",
    "parse_field_spec",
    "jacobi_minus_one",
    "multiplicative_generator",
    "is_prime",
    "is_irreducible",
    "prime_factors",
    "q_ceiling",
]

DEFAULT_Q_CEILING = 2**16


class FieldError(ValueError):
    pass


class NotPrime(FieldError):
    pass


class NotIrreducible(FieldError):
    pass


class EvenCharacteristic(FieldError):
    pass


class FieldTooLarge(FieldError):
    pass


class SpecMismatch(TypeError):
    """Two operands live in different fields."""


def q_ceiling() -> int:
    """Largest admissible field size; ``CHROMASUM_Q_CEILING`` overrides the default."""
    raw = os.environ.get("CHROMASUM_Q_CEILING")
    if raw is None or not raw.strip():
        return DEFAULT_Q_CEILING
    return int(raw)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomials over F_p, constant term first ------------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    # f monic
    a = _trim([c % p for c in a])
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        lead = a[-1]
        shift = len(a) - 1 - df
        for i, c in enumerate(f):
            a[shift + i] = (a[shift + i] - lead * c) % p
        _trim(a)
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _poly_mulmod(a, b, f, p):
    return _poly_mod(_poly_mul(a, b, p), f, p)


def _poly_powmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = _poly_mod([1], f, p)
    base = _poly_mod(list(a), f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        monic_b = [c * inv % p for c in b]
        a, b = b, _poly_mod(a, monic_b, p)
    return a


def is_irreducible(modulus, p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p (constant term first)."""
    f = [c % p for c in modulus]
    r = len(f) - 1
    if r < 1 or f[-1] != 1:
        raise ValueError("modulus must be monic of positive degree")
    if r == 1:
        return True
    x = [0, 1]

    def frobenius_power(d):
        h = x
        for _ in range(d):
            h = _poly_powmod(h, p, f, p)
        return h

    if _poly_sub(frobenius_power(r), _poly_mod(x, f, p), p):
        return False
    for ell in prime_factors(r):
        h = _poly_sub(frobenius_power(r // ell), x, p)
        if len(_poly_gcd(f, h, p)) != 1:
            return False
    return True


# -- fields ------------------------------------------------------------------


class FieldSpec:
    """The field F_{p^r} presented as F_p[X]/(modulus).

    Instances are cached by :func:`field_make`; equality is by (p, modulus).
    """

    def __init__(self, p: int, r: int, modulus: tuple[int, ...]):
        self.p = p
        self.r = r
        self.modulus = modulus
        self.q = p**r
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._roots: dict[int, list[FieldElement]] | None = None
        self._generator: FieldElement | None = None

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, FieldSpec) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, r={self.r}, modulus={list(self.modulus)})"

    def __str__(self):
        return f"F_{self.q}"

    # construction of elements

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise SpecMismatch(f"element of {value.spec} used in {self}")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        coeffs = list(value)
        if len(coeffs) > self.r:
            raise ValueError(f"{len(coeffs)} coefficients given for a degree-{self.r} field")
        return FieldElement(self, self._index(coeffs))

    def _index(self, coeffs) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + int(c) % self.p
        return v

    def _coeffs(self, v: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.r):
            v, c = divmod(v, self.p)
            out.append(c)
        return tuple(out)

    def from_index(self, v: int) -> FieldElement:
        if not 0 <= v < self.q:
            raise ValueError(f"index {v} out of range for {self}")
        return FieldElement(self, v)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self):
        """All q elements in index order (0 and 1 first)."""
        return [FieldElement(self, v) for v in range(self.q)]

    def nonzero_elements(self):
        return [FieldElement(self, v) for v in range(1, self.q)]

    def jacobi_minus_one(self) -> int:
        return (1 if self.p % 4 == 1 else -1) ** self.r

    def square_roots(self) -> dict[int, list[FieldElement]]:
        """Map from the index of each square to its square roots."""
        if self._roots is None:
            roots: dict[int, list[FieldElement]] = {}
            for a in self.elements():
                roots.setdefault((a * a)._v, []).append(a)
            self._roots = roots
        return self._roots

    def sqrt(self, a: FieldElement) -> list[FieldElement]:
        return list(self.square_roots().get(self(a)._v, []))

    # raw arithmetic on indices

    def _tables(self):
        if self._exp is None:
            g = multiplicative_generator(self)
            f = list(self.modulus)
            gpoly = _trim(list(g.coeffs))
            exp = [0] * (self.q - 1)
            log = [0] * self.q
            cur = [1]
            for i in range(self.q - 1):
                v = self._index(cur)
                exp[i] = v
                log[v] = i
                cur = _poly_mulmod(cur, gpoly, f, self.p)
            self._exp, self._log = exp, log
        return self._exp, self._log

    def _add(self, a: int, b: int) -> int:
        p = self.p
        if self.r == 1:
            return (a + b) % p
        out, scale = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += (da + db) % p * scale
            scale *= p
        return out

    def _neg(self, a: int) -> int:
        p = self.p
        if self.r == 1:
            return -a % p
        out, scale = 0, 1
        while a:
            a, da = divmod(a, p)
            out += -da % p * scale
            scale *= p
        return out

    def _mul(self, a: int, b: int) -> int:
        if self.r == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        exp, log = self._tables()
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def _inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        if self.r == 1:
            return pow(a, -1, self.p)
        exp, log = self._tables()
        return exp[-log[a] % (self.q - 1)]

    def _pow(self, a: int, n: int) -> int:
        if n < 0:
            return self._pow(self._inv(a), -n)
        if self.r == 1:
            return pow(a, n, self.p)
        if n == 0:
            return 1
        if a == 0:
            return 0
        exp, log = self._tables()
        return exp[log[a] * n % (self.q - 1)]


class FieldElement:
    """An immutable element of a :class:`FieldSpec`.

    Ints mix freely with elements (they embed into the prime subfield);
    elements of different specs do not.
    """

    __slots__ = ("spec", "_v")

    def __init__(self, spec: FieldSpec, v: int):
        self.spec = spec
        self._v = v

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec._coeffs(self._v)

    @property
    def index(self) -> int:
        return self._v

    def _other(self, other) -> int | None:
        if isinstance(other, FieldElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise SpecMismatch(f"cannot combine elements of {self.spec} and {other.spec}")
            return other._v
        if isinstance(other, int):
            return other % self.spec.p
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec._add(self._v, o))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.spec, self.spec._neg(self._v))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec._add(self._v, self.spec._neg(o)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec._add(o, self.spec._neg(self._v)))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec._mul(self._v, o))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec._inv(self._v))

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec._mul(self._v, self.spec._inv(o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec._mul(o, self.spec._inv(self._v)))

    def __pow__(self, n: int):
        return FieldElement(self.spec, self.spec._pow(self._v, int(n)))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self._v == other._v
        if isinstance(other, int):
            return self._v == other % self.spec.p
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self._v))

    def __bool__(self):
        return self._v != 0

    def is_prime_subfield(self) -> bool:
        return self._v < self.spec.p

    def __int__(self):
        if not self.is_prime_subfield():
            raise ValueError(f"{self} is not in the prime subfield")
        return self._v

    def sort_key(self):
        return self.coeffs

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, spec: FieldSpec, obj) -> FieldElement:
        if isinstance(obj, int):
            return spec(obj)
        return spec(obj["coeffs"])

    def __str__(self):
        if self.spec.r == 1:
            return str(self._v)
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return f"FieldElement({self.spec}, {self})"


@functools.lru_cache(maxsize=None)
def _cached_spec(p: int, r: int, modulus: tuple[int, ...]) -> FieldSpec:
    return FieldSpec(p, r, modulus)


def field_make(p: int, r: int = 1, modulus=None) -> FieldSpec:
    """Build F_{p^r}.

    Without a modulus the lexicographically smallest monic irreducible of
    degree r is used, comparing the non-leading coefficients as a tuple
    ``(c_0, ..., c_{r-1})``.  A supplied modulus of degree r is scaled to be
    monic and must be irreducible.
    """
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if r < 1:
        raise ValueError(f"degree must be positive, got {r}")
    q = p**r
    ceiling = q_ceiling()
    if q > ceiling:
        raise FieldTooLarge(f"q = {q} exceeds the ceiling {ceiling}")
    if modulus is None:
        for low in itertools.product(range(p), repeat=r):
            cand = low + (1,)
            if is_irreducible(cand, p):
                return _cached_spec(p, r, cand)
        raise AssertionError("no irreducible polynomial found")  # pragma: no cover
    coeffs = [int(c) % p for c in modulus]
    _trim(coeffs)
    if len(coeffs) - 1 != r:
        raise NotIrreducible(f"modulus {list(modulus)} does not have degree {r} over F_{p}")
    lead_inv = pow(coeffs[-1], -1, p)
    monic = tuple(c * lead_inv % p for c in coeffs)
    if not is_irreducible(monic, p):
        raise NotIrreducible(f"modulus {list(modulus)} is reducible over F_{p}")
    return _cached_spec(p, r, monic)


_SPEC_RE = re.compile(r"\s*([a-z]+)\s*=\s*(.*)")


def parse_field_spec(text: str) -> FieldSpec:
    """Parse ``"p=3,r=3,modulus=1,1,0,-1"`` (r and modulus optional)."""
    fields: dict[str, str] = {}
    key = None
    for chunk in text.split(","):
        m = _SPEC_RE.fullmatch(chunk)
        if m:
            key = m.group(1)
            fields[key] = m.group(2).strip()
        elif key == "modulus":
            fields[key] += "," + chunk.strip()
        else:
            raise ValueError(f"cannot parse field spec {text!r}")
    unknown = set(fields) - {"p", "r", "modulus"}
    if unknown or "p" not in fields:
        raise ValueError(f"cannot parse field spec {text!r}")
    modulus = None
    if fields.get("modulus"):
        modulus = [int(c) for c in fields["modulus"].split(",")]
    return field_make(int(fields["p"]), int(fields.get("r", 1)), modulus)


def jacobi_minus_one(spec: FieldSpec) -> int:
    """(-1/q): +1 when -1 is a square in F_q, else -1."""
    return spec.jacobi_minus_one()


def multiplicative_generator(spec: FieldSpec) -> FieldElement:
    """Smallest element (in index order) of multiplicative order q - 1."""
    if spec._generator is not None:
        return spec._generator
    f = list(spec.modulus)
    p, q = spec.p, spec.q
    cofactors = [(q - 1) // ell for ell in prime_factors(q - 1)]
    for v in range(1, q):
        poly = _trim(list(spec._coeffs(v)))
        if all(_poly_powmod(poly, e, f, p) != [1] for e in cofactors):
            spec._generator = FieldElement(spec, v)
            return spec._generator
    raise AssertionError("no generator found")  # pragma: no cover
