"""The normalized circle sum psi_{c,q} of a 2-polynumber.

psi_{c,q}(pi) is the average of pi's values over the unit circle of color c
in F_q^2.  It can be computed three ways:

* ``brute``   sum over the circle points directly;
* ``closed``  for a monomial alpha^k beta^l, a short signed sum ("ladder")
  of coefficients of the circular polynumber pi_{k,l}, reduced mod p;
* ``program`` first shrink the exponents with the periodicity step
  k = Qq + R -> Q + R until both are below q, then apply the closed
  formula for that principal range.

``auto`` picks ``program`` when an exponent is at least q and ``closed``
otherwise.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field

from .arith import rational_reduce_mod_p
from .chromogeometry import (
    Color,
    circle_enumerate,
    circle_size,
    on_circle,
    rotation_matrices,
    AffinePoint,
)
from .finite_field import FieldElement, FieldSpec
from .polynumber import (
    Polynumber2,
    circular_polynumber,
    coefficient_at,
    delta_polynumber,
    ladder_sum,
    substitute_linear,
)
from .super_catalan import circular_super_catalan

__all__ = [
    "METHODS",
    "LadderPlan",
    "PsiResult",
    "ProgramResult",
    "AxiomReport",
    "psi_brute",
    "psi_green_closed",
    "psi_red_closed",
    "psi_blue_closed",
    "psi_closed",
    "ladder_plan",
    "psi_monomial",
    "psi",
    "psi_general",
    "periodicity_reduce",
    "reduction_chain",
    "fourier_summation_program",
    "axiom_check",
    "circle_form_polynumber",
]

METHODS = ("brute", "closed", "program", "auto")


@dataclass(frozen=True)
class LadderPlan:
    w: int
    R: int
    center: int
    indices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"w": self.w, "R": self.R, "indices": list(self.indices)}


# -- brute force -------------------------------------------------------------


def _circle_scale(color, spec: FieldSpec) -> FieldElement:
    return spec(circle_size(color, spec)).inverse()


def _psi_brute_monomial(color, spec: FieldSpec, k: int, l: int) -> FieldElement:
    pw, mul, add = spec._pow, spec._mul, spec._add
    acc = 0
    for pt in circle_enumerate(color, spec):
        acc = add(acc, mul(pw(pt.x.index, k), pw(pt.y.index, l)))
    return spec.from_index(acc) * _circle_scale(color, spec)


def psi_brute(color, spec: FieldSpec, pi) -> FieldElement:
    """Average of pi over the unit circle, by direct evaluation.

    ``pi`` is either an exponent pair ``(k, l)`` or a :class:`Polynumber2`
    with coefficients in ``spec``.
    """
    color = Color.parse(color)
    if isinstance(pi, tuple):
        k, l = pi
        return _psi_brute_monomial(color, spec, k, l)
    from .polynumber import evaluate

    acc = spec.zero
    for pt in circle_enumerate(color, spec):
        acc = acc + evaluate(pi, pt)
    return acc * _circle_scale(color, spec)


# -- closed forms ------------------------------------------------------------


def _ladder_geometry(color: Color, spec: FieldSpec) -> int:
    # |S| for red and blue; the rung spacing is half of it
    return circle_size(color, spec)


def ladder_plan(color, spec: FieldSpec, k: int, l: int) -> LadderPlan | None:
    """Rungs for alpha^k beta^l, or None when the value is decided without one."""
    color = Color.parse(color)
    if color is Color.GREEN or k % 2 or l % 2:
        return None
    size = _ladder_geometry(color, spec)
    w, R = size // 2, (k + l) // size
    center = (k + l) // 2
    return LadderPlan(w, R, center, tuple(center + d * w for d in range(-R, R + 1)))


def _to_field(spec: FieldSpec, x) -> FieldElement:
    return spec(rational_reduce_mod_p(x, spec.p))


@functools.lru_cache(maxsize=1 << 16)
def psi_green_closed(spec: FieldSpec, k: int, l: int) -> FieldElement:
    return spec.one if (k - l) % (spec.q - 1) == 0 else spec.zero


@functools.lru_cache(maxsize=1 << 16)
def psi_red_closed(spec: FieldSpec, k: int, l: int) -> FieldElement:
    plan = ladder_plan(Color.RED, spec, k, l)
    if plan is None:
        return spec.zero
    return _to_field(spec, ladder_sum(circular_polynumber(k, l), plan.indices))


@functools.lru_cache(maxsize=1 << 16)
def psi_blue_closed(spec: FieldSpec, k: int, l: int) -> FieldElement:
    plan = ladder_plan(Color.BLUE, spec, k, l)
    if plan is None:
        return spec.zero
    total = ladder_sum(circular_polynumber(k, l), plan.indices)
    return _to_field(spec, (-1) ** (l // 2) * total)


_CLOSED = {
    Color.GREEN: psi_green_closed,
    Color.RED: psi_red_closed,
    Color.BLUE: psi_blue_closed,
}


def psi_closed(color, spec: FieldSpec, k: int, l: int) -> FieldElement:
    return _CLOSED[Color.parse(color)](spec, k, l)


# -- periodicity and the summation program -----------------------------------


def _reduce_exponent(k: int, q: int) -> int:
    if k < q:
        return k
    Q, R = divmod(k, q)
    return Q + R


def periodicity_reduce(k: int, l: int, q: int) -> tuple[int, int]:
    """One step k = Qq + R -> Q + R on each exponent that is at least q."""
    return _reduce_exponent(k, q), _reduce_exponent(l, q)


def reduction_chain(k: int, l: int, q: int) -> list[tuple[int, int]]:
    """Successive reductions of (k, l), excluding the start, until both are below q."""
    chain = []
    while k >= q or l >= q:
        k, l = periodicity_reduce(k, l, q)
        chain.append((k, l))
    return chain


@dataclass
class ProgramResult:
    chain: list[tuple[int, int]]
    m_star: int
    n_star: int
    value: FieldElement


def _principal_range_value(color: Color, spec: FieldSpec, m: int, n: int) -> FieldElement:
    """psi of alpha^2m beta^2n for 2m, 2n < q, from the central coefficient,
    the coefficient one half-period above it, and the boundary correction."""
    q = spec.q
    c = m + n
    pi = circular_polynumber(2 * m, 2 * n)
    omega = circular_super_catalan(m, n)
    sign = (-1) ** n
    if color is Color.RED:
        w = (q - 1) // 2
        total = sign * omega + 2 * coefficient_at(pi, c + w)
        if c == 2 * w:
            total += 2 * omega.__class__(1, 4**c)
    elif spec.jacobi_minus_one() == 1:
        w = (q - 1) // 2
        total = omega + 2 * sign * coefficient_at(pi, c + w)
        if c == 2 * w:
            total += 2 * sign * omega.__class__(1, 4**c)
    else:
        w = (q + 1) // 2
        total = omega + 2 * sign * coefficient_at(pi, c + w)
    return _to_field(spec, total)


def fourier_summation_program(color, spec: FieldSpec, m: int, n: int) -> ProgramResult:
    """psi of alpha^2m beta^2n through exponent reduction.

    The reduced exponents stay even because q is odd, so the result is
    reported as (m*, n*) with the final monomial alpha^2m* beta^2n*.
    """
    color = Color.parse(color)
    chain = reduction_chain(2 * m, 2 * n, spec.q)
    M, N = chain[-1] if chain else (2 * m, 2 * n)
    assert M % 2 == 0 and N % 2 == 0
    if color is Color.GREEN:
        value = psi_green_closed(spec, M, N)
    else:
        value = _principal_range_value(color, spec, M // 2, N // 2)
    return ProgramResult(chain, M // 2, N // 2, value)


# -- dispatch ----------------------------------------------------------------


@dataclass
class PsiResult:
    value: FieldElement
    method: str
    ladder: LadderPlan | None = None
    chain: list[tuple[int, int]] = field(default_factory=list)


def psi(color, spec: FieldSpec, k: int, l: int, method: str = "auto") -> PsiResult:
    """psi of alpha^k beta^l with the chosen method, plus how it was computed."""
    color = Color.parse(color)
    if k < 0 or l < 0:
        raise ValueError("exponents must be non-negative")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        method = "program" if max(k, l) >= spec.q else "closed"
    if method == "brute":
        return PsiResult(psi_brute(color, spec, (k, l)), method)
    if method == "closed":
        return PsiResult(psi_closed(color, spec, k, l), method, ladder_plan(color, spec, k, l))
    if color is not Color.GREEN and k % 2 == 0 and l % 2 == 0:
        res = fourier_summation_program(color, spec, k // 2, l // 2)
        return PsiResult(res.value, method, None, res.chain)
    chain = reduction_chain(k, l, spec.q)
    kk, ll = chain[-1] if chain else (k, l)
    return PsiResult(psi_closed(color, spec, kk, ll), method, None, chain)


def psi_monomial(color, spec: FieldSpec, k: int, l: int, method: str = "auto") -> FieldElement:
    return psi(color, spec, k, l, method).value


def psi_general(color, spec: FieldSpec, pi: Polynumber2, method: str = "auto") -> FieldElement:
    """psi of an arbitrary 2-polynumber, by linearity over its monomials."""
    if pi.ring != spec:
        raise TypeError(f"polynumber over {pi.ring} used with {spec}")
    if method == "brute":
        return psi_brute(color, spec, pi)
    acc = spec.zero
    for i, j, c in pi.terms():
        acc = acc + c * psi_monomial(color, spec, i, j, method)
    return acc


# -- axioms ------------------------------------------------------------------


def circle_form_polynumber(color, spec: FieldSpec) -> Polynumber2:
    """The defining quadratic of the circle minus one, as a 2-polynumber."""
    color = Color.parse(color)
    terms = {(0, 0): -1}
    if color is Color.GREEN:
        terms[(1, 1)] = 1
    else:
        terms[(2, 0)] = 1
        terms[(0, 2)] = 1 if color is Color.BLUE else -1
    return Polynumber2.from_terms(terms, spec)


def _random_polynumber(rng: random.Random, spec: FieldSpec, max_degree: int) -> Polynumber2:
    terms = {}
    for _ in range(rng.randint(1, 6)):
        ij = (rng.randint(0, max_degree), rng.randint(0, max_degree))
        terms[ij] = spec.from_index(rng.randrange(spec.q))
    return Polynumber2.from_terms(terms, spec)


@dataclass
class AxiomReport:
    color: Color
    spec: FieldSpec
    checked: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def _record(self, name: str, passed: bool, detail: str):
        self.checked[name] = self.checked.get(name, 0) + 1
        if not passed:
            self.failures.append(f"{name}: {detail}")


def axiom_check(
    color,
    spec: FieldSpec,
    seed: int = 0,
    vanishing: int = 200,
    random_count: int = 20,
    max_degree: int = 4,
    method: str = "closed",
) -> AxiomReport:
    """Normalization, locality and rotation invariance of psi on concrete inputs.

    Locality uses multiples of the circle's defining quadratic (minus one)
    and delta polynumbers of points off the circle; invariance uses every
    rotation against ``random_count`` random polynumbers.
    """
    color = Color.parse(color)
    rng = random.Random(seed)
    report = AxiomReport(color, spec)

    def value(pi):
        return psi_general(color, spec, pi, method)

    one = Polynumber2.constant(1, spec)
    report._record("normalization", value(one) == 1, f"psi(1) = {value(one)}")

    form = circle_form_polynumber(color, spec)
    off_circle = [
        AffinePoint(x, y)
        for x in spec.elements()
        for y in spec.elements()
        if not on_circle(color, AffinePoint(x, y))
    ]
    n_delta = min(len(off_circle), vanishing // 4)
    for pt in rng.sample(off_circle, n_delta):
        v = value(delta_polynumber(pt))
        report._record("locality", v == 0, f"psi(delta at {pt}) = {v}")
    for _ in range(vanishing - n_delta):
        sigma = _random_polynumber(rng, spec, max_degree)
        v = value(form * sigma)
        report._record("locality", v == 0, f"psi(form * {sigma!r}) = {v}")

    rotations = rotation_matrices(color, spec)
    for _ in range(random_count):
        pi = _random_polynumber(rng, spec, max_degree)
        base = value(pi)
        for h in rotations:
            v = value(substitute_linear(pi, h))
            report._record("invariance", v == base, f"psi(h.{pi!r}) = {v} != {base}")
    return report
