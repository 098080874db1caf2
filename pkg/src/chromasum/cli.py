"""Command-line front end.

    chromasum field  --p 3 --r 3 --modulus 1,1,0,-1
    chromasum circle --color blue --p 13
    chromasum psi    --color red --p 17 --k 40 --l 24 --method program --explain
    chromasum tables --which psi-grid --color blue --p 13 --max 6
    chromasum verify --suite oracle --p-list 3,5,7 --max-r 2 --max-degree 20
    chromasum bench  --color blue --p 13 --max-degree 40

Exit status is 2 for bad flags and 1 for math errors or failed checks.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .arith import format_rational
from .chromogeometry import Color, circle_enumerate, circle_parametrize, circle_size
from .finite_field import FieldError, field_make, multiplicative_generator
from .fourier import METHODS, psi, psi_general
from .polynumber import Polynumber2, circular_polynumber
from .super_catalan import circular_super_catalan, super_catalan
from . import verify


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(c) for c in text.split(",") if c.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _add_field_flags(parser, required=True):
    parser.add_argument("--p", type=int, required=required, help="odd prime characteristic")
    parser.add_argument("--r", type=int, default=1, help="extension degree (default 1)")
    parser.add_argument("--modulus", type=_int_list, help="coefficients, constant term first")


def _add_color(parser, required=True):
    parser.add_argument("--color", choices=[c.value for c in Color], required=required)


def _spec(args):
    return field_make(args.p, args.r, args.modulus)


def _dump(obj):
    print(json.dumps(obj))


# -- commands ----------------------------------------------------------------


def cmd_field(args):
    spec = _spec(args)
    _dump(
        {
            "p": spec.p,
            "r": spec.r,
            "q": spec.q,
            "modulus": list(spec.modulus),
            "minus_one_is_square": spec.jacobi_minus_one() == 1,
            "generator": multiplicative_generator(spec).to_json(),
        }
    )
    return 0


def cmd_circle(args):
    spec = _spec(args)
    make = circle_parametrize if args.method == "parametrize" else circle_enumerate
    circle = make(args.color, spec)
    _dump(
        {
            "color": args.color,
            "p": spec.p,
            "r": spec.r,
            "size": len(circle),
            "expected_size": circle_size(args.color, spec),
            "points": circle.to_json(),
        }
    )
    return 0


def _read_poly(path, spec) -> Polynumber2:
    with open(path) as fh:
        obj = json.load(fh)
    return Polynumber2.from_json(obj, spec)


def cmd_psi(args):
    spec = _spec(args)
    if args.poly is not None:
        pi = _read_poly(args.poly, spec)
        value = psi_general(args.color, spec, pi, args.method)
        _dump({"color": args.color, "p": spec.p, "r": spec.r, "method": args.method, "value": value.to_json()})
        return 0
    res = psi(args.color, spec, args.k, args.l, args.method)
    out = {
        "color": args.color,
        "p": spec.p,
        "r": spec.r,
        "k": args.k,
        "l": args.l,
        "method": res.method,
        "value": res.value.to_json(),
    }
    if res.ladder is not None:
        out["ladder"] = res.ladder.to_json()
    if args.explain:
        out["chain"] = [list(step) for step in res.chain]
    _dump(out)
    return 0


def _grid_text(rows, corner="m\\n"):
    cells = [[corner] + [str(j) for j in range(len(rows[0]))]]
    cells += [[str(i)] + [str(v) for v in row] for i, row in enumerate(rows)]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def cmd_tables(args):
    n = args.max
    which = args.which
    if which == "super-catalan":
        rows = [[super_catalan(m, k) for k in range(n + 1)] for m in range(n + 1)]
    elif which == "omega":
        rows = [[format_rational(circular_super_catalan(m, k)) for k in range(n + 1)] for m in range(n + 1)]
    elif which == "psi-grid":
        if args.color is None or args.p is None:
            raise UsageError("psi-grid needs --color and --p")
        spec = _spec(args)
        rows = [
            [str(psi(args.color, spec, 2 * m, 2 * k, "closed").value) for k in range(n + 1)]
            for m in range(n + 1)
        ]
    else:
        return _circular_table(n, args.format)

    if args.format == "json":
        _dump({"which": which, "max": n, "rows": rows})
    elif args.format == "csv":
        for row in rows:
            print(",".join(str(v) for v in row))
    else:
        print(_grid_text(rows))
    return 0


def _circular_table(n, fmt):
    # every (k, l) with k + l <= n, by total degree
    entries = []
    for d in range(n + 1):
        for k in range(d, -1, -1):
            pi = circular_polynumber(k, d - k)
            entries.append((k, d - k, [format_rational(c) for c in pi.coeffs]))
    if fmt == "json":
        _dump({"which": "circular-polynumbers", "max": n,
               "entries": [{"k": k, "l": l, "coeffs": cs} for k, l, cs in entries]})
    elif fmt == "csv":
        for k, l, cs in entries:
            print(",".join([str(k), str(l)] + cs))
    else:
        for k, l, cs in entries:
            print(f"pi_{k},{l}: [{', '.join(cs)}]")
    return 0


def cmd_verify(args):
    suites = verify.SUITES if args.suite == "all" else (args.suite,)
    p_list = args.p_list or [3, 5, 7, 11, 13]
    reports = []
    for name in suites:
        if name == "identities":
            reports.append(verify.identities_suite())
            continue
        if name == "axioms":
            specs = verify.fields_for(p_list, args.max_r, max_q=13)
            reports.append(verify.axioms_suite(specs, seed=args.seed))
        elif name == "oracle":
            specs = verify.fields_for(p_list, args.max_r)
            reports.append(verify.oracle_suite(specs, args.max_degree))
        else:
            specs = verify.fields_for(p_list, args.max_r)
            reports.append(verify.periodicity_suite(specs, args.max_degree))
    ok = True
    for rep in reports:
        print(rep.summary())
        for msg in rep.failures:
            print(f"  {msg}")
        ok = ok and rep.ok
    return 0 if ok else 1


def cmd_bench(args):
    spec = _spec(args)
    q = spec.q
    top = args.max_degree
    methods = ["brute", "closed", "program"]
    pairs = [(k, l) for k in range(0, top + 1) for l in range(0, top + 1)]
    values = {m: [psi(args.color, spec, k, l, m).value for k, l in pairs] for m in methods}
    bad = [
        (k, l) for i, (k, l) in enumerate(pairs) if len({values[m][i] for m in methods}) != 1
    ]
    if bad:
        print(f"methods disagree on {len(bad)} monomials, first {bad[0]}", file=sys.stderr)
        return 1
    # buckets by total degree in units of q
    buckets: dict[int, list[tuple[int, int]]] = {}
    for k, l in pairs:
        buckets.setdefault((k + l) // q, []).append((k, l))
    print(f"{args.color} over {spec}, exponents <= {top}; seconds per bucket")
    print(f"{'k+l range':>14} {'count':>6} " + " ".join(f"{m:>10}" for m in methods))
    for b in sorted(buckets):
        items = buckets[b]
        times = []
        for m in methods:
            t0 = time.perf_counter()
            for k, l in items:
                psi(args.color, spec, k, l, m)
            times.append(time.perf_counter() - t0)
        label = f"[{b * q},{(b + 1) * q})"
        print(f"{label:>14} {len(items):>6} " + " ".join(f"{t:>10.4f}" for t in times))
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromasum", description="Circle sums of polynumbers over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="describe a finite field")
    _add_field_flags(p)
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("circle", help="list the points of a unit circle")
    _add_color(p)
    _add_field_flags(p)
    p.add_argument("--method", choices=["enumerate", "parametrize"], default="enumerate")
    p.set_defaults(func=cmd_circle)

    p = sub.add_parser("psi", help="normalized circle sum of a monomial or polynumber")
    _add_color(p)
    _add_field_flags(p)
    p.add_argument("--k", type=_natural)
    p.add_argument("--l", type=_natural)
    p.add_argument("--poly", metavar="FILE", help="JSON 2-D grid of field elements")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--explain", action="store_true", help="include the reduction chain")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("tables", help="print reference tables")
    p.add_argument("--which", required=True, choices=["super-catalan", "omega", "circular-polynumbers", "psi-grid"])
    p.add_argument("--max", type=_natural, required=True)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    _add_color(p, required=False)
    _add_field_flags(p, required=False)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=list(verify.SUITES) + ["all"], default="all")
    p.add_argument("--p-list", type=_int_list)
    p.add_argument("--max-r", type=_natural, default=1)
    p.add_argument("--max-degree", type=_natural)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time brute force against the closed forms")
    _add_color(p)
    _add_field_flags(p)
    p.add_argument("--max-degree", type=_natural, required=True)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "psi" and args.poly is None and (args.k is None or args.l is None):
        parser.error("psi needs --k and --l, or --poly")
    if args.command == "psi" and args.poly is not None and (args.k is not None or args.l is not None):
        parser.error("--poly cannot be combined with --k/--l")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (FieldError, ValueError, TypeError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
