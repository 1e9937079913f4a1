"""Certificate for a Jacobian order over F_{p^2}: exhibit the l-part of J(F_{p^2}).

Random classes [P - inf-] are multiplied by the cofactor of l^k in the computed
order; their closure is a subgroup of l-power order, which lower-bounds the
l-part of the true order independently of the counting code.

    python scripts/certify_order.py C1 23 -1 --ell 3
"""

from __future__ import annotations

import argparse
import random

from hyperjac.curve import CURVES, INF_MINUS, AffinePoint
from hyperjac.finfield import make_fp2
from hyperjac.jacobian import jacobian, subgroup_closure
from hyperjac.zeta import format_factored, jacobian_order, strip_prime


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("curve", choices=sorted(CURVES))
    parser.add_argument("p", type=int)
    parser.add_argument("d", type=int)
    parser.add_argument("--ell", type=int, default=3)
    parser.add_argument("--samples", type=int, default=8)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    C = CURVES[args.curve]
    F = make_fp2(args.p, args.d)
    J = jacobian(C, F)
    n = jacobian_order(C, args.p, 2)
    ell_part = n // strip_prime(n, args.ell)
    print(f"|J(F_{F.order})| = {n} = {format_factored(n)}; {args.ell}-part {ell_part}")
    rng = random.Random(args.seed)
    gens = []
    while len(gens) < args.samples:
        x = F.element(rng.randrange(F.order))
        y = F.sqrt(C.poly(F)(x))
        if y is not None:
            gens.append((n // ell_part) * J.from_points(AffinePoint(x, y), INF_MINUS))
    sub = subgroup_closure(gens, ell_part, J)
    print(f"closure of {args.samples} random {args.ell}-parts: {len(sub)} elements")
    return 0 if len(sub) == ell_part else 1


if __name__ == "__main__":
    raise SystemExit(main())
