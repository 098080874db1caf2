"""Batch checks shared by the ``verify`` command and the acceptance tests.

Each suite returns a :class:`SuiteReport`; nothing here raises on a failed
check, failures are collected as readable strings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import binomial
from .chromogeometry import Color
from .finite_field import FieldSpec, field_make, q_ceiling
from .fourier import (
    axiom_check,
    fourier_summation_program,
    psi_brute,
    psi_closed,
    periodicity_reduce,
    reduction_chain,
)
from .polynumber import circular_polynumber, krawtchouk_generating, krawtchouk_value
from .super_catalan import circular_super_catalan, gmt_identity_check, super_catalan

SUITES = ("oracle", "axioms", "identities", "periodicity")


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, passed: bool, detail):
        self.checked += 1
        if not passed:
            self.failures.append(detail if isinstance(detail, str) else detail())

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {status} ({self.checked} checks, {len(self.failures)} failures)"


def fields_for(p_list, max_r: int, max_q: int | None = None) -> list[FieldSpec]:
    """Default-modulus fields F_{p^r}, r <= max_r, skipping those above the ceiling."""
    limit = q_ceiling() if max_q is None else min(max_q, q_ceiling())
    out = []
    for p in p_list:
        for r in range(1, max_r + 1):
            if p**r <= limit:
                out.append(field_make(p, r))
    return out


def oracle_suite(specs, max_degree: int | None = None, colors=tuple(Color)) -> SuiteReport:
    """Closed forms (and the reduction program on even monomials) against brute force.

    ``max_degree`` bounds each exponent; the default is 2q + 2.
    """
    report = SuiteReport("oracle")
    for spec in specs:
        top = 2 * spec.q + 2 if max_degree is None else max_degree
        for color in colors:
            for k in range(top + 1):
                for l in range(top + 1):
                    expect = psi_brute(color, spec, (k, l))
                    got = psi_closed(color, spec, k, l)
                    report.check(got == expect, lambda: f"{color} {spec} k={k} l={l}: closed {got} brute {expect}")
                    if k % 2 == 0 and l % 2 == 0:
                        prog = fourier_summation_program(color, spec, k // 2, l // 2).value
                        report.check(
                            prog == expect,
                            lambda: f"{color} {spec} k={k} l={l}: program {prog} brute {expect}",
                        )
    return report


def periodicity_suite(specs, max_degree: int | None = None, colors=tuple(Color)) -> SuiteReport:
    """Every step of the exponent reduction keeps the brute-force value."""
    report = SuiteReport("periodicity")
    for spec in specs:
        q = spec.q
        top = 3 * q if max_degree is None else max_degree
        for color in colors:
            for k in range(top + 1):
                for l in range(top + 1):
                    if k < q and l < q:
                        continue
                    start = psi_brute(color, spec, (k, l))
                    for kk, ll in reduction_chain(k, l, q):
                        v = psi_brute(color, spec, (kk, ll))
                        report.check(v == start, lambda: f"{color} {spec} ({k},{l}) -> ({kk},{ll}): {v} != {start}")
                    kk, ll = periodicity_reduce(k, l, q)
                    report.check(kk <= k and ll <= l, f"{spec} ({k},{l}) grew to ({kk},{ll})")
    return report


def axioms_suite(specs, seed: int = 0, vanishing: int = 200, random_count: int = 20) -> SuiteReport:
    report = SuiteReport("axioms")
    for spec in specs:
        for color in Color:
            res = axiom_check(color, spec, seed=seed, vanishing=vanishing, random_count=random_count)
            report.checked += sum(res.checked.values())
            report.failures.extend(f"{color} {spec} {msg}" for msg in res.failures)
    return report


def identities_suite(
    gmt_max: int = 20,
    bridge_max: int = 12,
    recurrence_max: int = 20,
    palindrome_max: int = 24,
    generating_max: int = 20,
) -> SuiteReport:
    """Exact integer and rational identities among S, Omega, pi_{k,l} and Krawtchouk values."""
    report = SuiteReport("identities")
    for m in range(gmt_max + 1):
        for n in range(gmt_max + 1 - m):
            report.check(gmt_identity_check(m, n), f"central coefficient identity fails at ({m},{n})")
    for m in range(bridge_max + 1):
        for n in range(bridge_max + 1):
            lhs = krawtchouk_value(m + n, 2 * m + 2 * n, 2 * m)
            report.check(lhs == (-1) ** m * super_catalan(m, n), f"Krawtchouk bridge fails at ({m},{n})")
    for m in range(recurrence_max + 1):
        for n in range(recurrence_max + 1):
            s = super_catalan(m, n)
            report.check(s == super_catalan(n, m), f"S not symmetric at ({m},{n})")
            report.check(
                4 * s == super_catalan(m + 1, n) + super_catalan(m, n + 1),
                f"S recurrence fails at ({m},{n})",
            )
            report.check(
                circular_super_catalan(m, n)
                == circular_super_catalan(m + 1, n) + circular_super_catalan(m, n + 1),
                f"Omega Pascal law fails at ({m},{n})",
            )
        report.check(super_catalan(0, m) == binomial(2 * m, m), f"S(0,{m}) is not C(2m,m)")
    for k in range(palindrome_max + 1):
        for l in range(palindrome_max + 1):
            pi, swapped = circular_polynumber(k, l), circular_polynumber(l, k)
            d = k + l
            for i in range(d + 1):
                report.check(pi[i] == (-1) ** l * pi[d - i], f"reflection law fails for pi_{k},{l} at {i}")
                report.check(pi[i] == (-1) ** i * swapped[i], f"swap law fails for pi_{k},{l} at {i}")
    for d in range(generating_max + 1):
        for m in range(d + 1):
            gen = krawtchouk_generating(d, m)
            report.check(
                all(gen[n] == krawtchouk_value(n, d, m) for n in range(d + 1)),
                f"generating function disagrees with explicit sum at d={d}, m={m}",
            )
    return report
