"""Running torsion bound over all good inert primes up to a limit.

    python scripts/scan_witness_primes.py C1 -1 --limit 60
"""

from __future__ import annotations

import argparse

from hyperjac.curve import CURVES, is_good_prime, is_inert
from hyperjac.finfield import is_prime
from hyperjac.zeta import format_factored, jacobian_order, torsion_bound


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("curve", choices=sorted(CURVES))
    parser.add_argument("d", type=int)
    parser.add_argument("--limit", type=int, default=60)
    args = parser.parse_args()
    C = CURVES[args.curve]
    witnesses = []
    print(f"{'p':>4}  {'|J(F_p^2)|':>12}  {'bound':>6}  factored")
    for p in range(3, args.limit + 1):
        if not is_prime(p) or args.d % p == 0 or not is_good_prime(C, p) or not is_inert(p, args.d):
            continue
        witnesses.append(p)
        n = jacobian_order(C, p, 2)
        report = torsion_bound(C, args.d, witnesses)
        bound = "-" if report.unbounded else report.bound
        print(f"{p:>4}  {n:>12}  {bound:>6}  {format_factored(n)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
