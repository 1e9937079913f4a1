"""Command line interface: ``hyperjac <subcommand> ...`` or ``python -m hyperjac``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .curve import CURVES, Genus2Curve, bad_primes, factor_integer, twist
from .errors import HyperjacError
from .finfield import FpDesc
from .pipeline import (
    all_ok,
    find_instance,
    k_group,
    load_instance,
    points_from_group,
    verify_paper,
)
from .jacobian import group_structure
from .zeta import (
    count_points,
    format_factored,
    jacobian_order,
    l_polynomial,
    quadratic_extension,
    torsion_bound,
)


def _curve(name: str) -> Genus2Curve:
    key = name.upper()
    if key in CURVES:
        return CURVES[key]
    if Path(name).exists():
        return load_instance(name).curve
    raise SystemExit(f"unknown curve {name!r}; use C1, C2 or an instance JSON file")


def _instance(name: str, d: int):
    if Path(name).exists():
        return load_instance(name)
    return find_instance(name, d)


def _primes(text: str) -> List[int]:
    return [int(t) for t in text.replace(" ", "").split(",") if t]


def cmd_badprimes(args) -> int:
    C = _curve(args.curve)
    disc = C.discriminant()
    print(f"{C}")
    print(f"disc(f)         = {disc} = {'-' if disc < 0 else ''}{format_factored(abs(disc))}")
    print(f"2^8 * |disc(f)| = {format_factored(2**8 * abs(disc))}")
    print("bad primes: " + ", ".join(str(p) for p in sorted(bad_primes(C))))
    return 0


def _maybe_twist(C: Genus2Curve, d: Optional[int]) -> Genus2Curve:
    return twist(C, d) if d is not None else C


def cmd_count(args) -> int:
    C = _maybe_twist(_curve(args.curve), args.twist)
    F = FpDesc(args.p) if args.ext == 1 else quadratic_extension(args.p)
    print(f"#{C.label or 'C'}(F_{args.p}^{args.ext}) = {count_points(C, F, workers=args.workers)}")
    return 0


def cmd_lpoly(args) -> int:
    C = _maybe_twist(_curve(args.curve), args.twist)
    L = l_polynomial(C, args.p)
    print(f"P(T) = {L}")
    print(f"c1 = {L.c1}, c2 = {L.c2}")
    print(f"|J(F_{args.p})| = P(1) = {L(1)} = {format_factored(L(1))}")
    return 0


def cmd_jacorder(args) -> int:
    C = _maybe_twist(_curve(args.curve), args.twist)
    n = jacobian_order(C, args.p, args.ext)
    q = args.p**args.ext
    print(f"|J(F_{q})| = {n} = {format_factored(n)}")
    return 0


def cmd_torsion_bound(args) -> int:
    C = _curve(args.curve)
    report = torsion_bound(C, args.d, _primes(args.primes))
    if args.format == "text":
        sys.stdout.write(report.to_text())
        return 0
    print(f"{'p':>4}  {'q':>7}  {'|J(F_q)|':>10}  factored")
    for w in report.witnesses:
        print(f"{w.p:>4}  {w.p**2:>7}  {w.order:>10}  {format_factored(w.order)}")
    print(f"bound = {report.bound} = {format_factored(report.bound)}")
    return 0


def cmd_group(args) -> int:
    spec = _instance(args.curve, args.d)
    bound = torsion_bound(spec.curve, spec.d, spec.witness_primes).bound
    elements = k_group(spec, bound)
    print(f"# {spec.name}: {len(elements)} elements, structure {group_structure(elements)}")
    for D in elements:
        print(D)
    return 0


def cmd_points(args) -> int:
    spec = _instance(args.curve, args.d)
    bound = torsion_bound(spec.curve, spec.d, spec.witness_primes).bound
    for P in points_from_group(spec, k_group(spec, bound)):
        print(P)
    return 0


def cmd_verify_paper(args) -> int:
    reports = verify_paper()
    for r in reports:
        print(r.summary())
        for e in r.errata:
            print(f"  erratum: {e}")
        for m in r.mismatches:
            print(f"  MISMATCH: {m}")
    if args.report:
        Path(args.report).write_text("\n".join(r.to_text() for r in reports))
    ok = all_ok(reports)
    n_errata = sum(len(r.errata) for r in reports)
    if ok:
        print("all reference anchors match" + (f" ({n_errata} documented erratum)" if n_errata else ""))
    else:
        print("reference anchors NOT reproduced")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperjac", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("badprimes", help="discriminant and primes of bad reduction")
    p.add_argument("curve")
    p.set_defaults(func=cmd_badprimes)

    for name, func, help_ in (
        ("count", cmd_count, "number of points over F_p or F_{p^2}"),
        ("lpoly", cmd_lpoly, "L-polynomial at p"),
        ("jacorder", cmd_jacorder, "order of J(F_p) or J(F_{p^2})"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("curve")
        p.add_argument("--p", type=int, required=True)
        if name != "lpoly":
            p.add_argument("--ext", type=int, choices=(1, 2), default=1 if name == "count" else 2)
        if name == "count":
            p.add_argument("--workers", type=int, default=1)
        p.add_argument("--twist", type=int, default=None, help="work on the quadratic twist by d")
        p.set_defaults(func=func)

    p = sub.add_parser("torsion-bound", help="gcd of prime-to-p Jacobian orders at inert primes")
    p.add_argument("curve")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--primes", required=True, help="comma separated, e.g. 11,23,31")
    p.add_argument("--format", choices=("table", "text"), default="table")
    p.set_defaults(func=cmd_torsion_bound)

    for name, func, help_ in (
        ("group", cmd_group, "list J(Q(sqrt d)) in Mumford form"),
        ("points", cmd_points, "list C(Q(sqrt d))"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("curve", help="C1, C2 or an instance JSON file")
        p.add_argument("--d", type=int, default=None)
        p.set_defaults(func=func)

    p = sub.add_parser("verify-paper", help="replay all three instances and check every anchor")
    p.add_argument("--report", help="write the structured report to this file")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "d", 0) is None and not Path(args.curve).exists():
        raise SystemExit("--d is required for built-in curves")
    try:
        return args.func(args)
    except HyperjacError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
