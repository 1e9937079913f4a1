"""Point counts, L-polynomials and Jacobian orders of genus-2 curves over F_p and F_{p^2},
and the torsion bound obtained by reducing at inert primes of good reduction."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, isqrt
from typing import List, Sequence, Tuple

from .curve import Genus2Curve, bad_primes, factor_integer, infinity_points, is_inert
from .errors import (
    BadReduction,
    EmptyWitnessList,
    NonIntegralC2,
    NotInert,
    ScanBoundExceeded,
)
from .finfield import FpDesc, Fp2Desc, _FiniteField, smallest_nonresidue, square_table
from .poly import SCAN_BOUND


def _check_good(C: Genus2Curve, p: int) -> None:
    if p in bad_primes(C) or C.lc % p == 0:
        raise BadReduction(f"{p} is a prime of bad reduction for {C.label or C}")


def _count_chunk(coeffs: Tuple[int, ...], F: _FiniteField, start: int, stop: int) -> int:
    """Affine points with x among elements start..stop-1 of F."""
    squares = square_table(F)
    f = [F(c) for c in coeffs]
    total = 0
    for i in range(start, stop):
        x = F.element(i)
        v = F.zero
        for c in reversed(f):
            v = v * x + c
        if not v:
            total += 1
        elif (v.a, v.b) in squares:
            total += 2
    return total


def count_points(C: Genus2Curve, F: _FiniteField, workers: int = 1) -> int:
    """#C(F) on the smooth model: affine solutions plus the points at infinity.

    With ``workers > 1`` the x-range is split across processes and the partial
    counts are summed.
    """
    _check_good(C, F.p)
    q = F.order
    if q > SCAN_BOUND:
        raise ScanBoundExceeded(f"field of size {q} exceeds scan bound {SCAN_BOUND}")
    if workers <= 1:
        affine = _count_chunk(C.coeffs, F, 0, q)
    else:
        step = -(-q // workers)
        bounds = [(s, min(s + step, q)) for s in range(0, q, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_count_chunk, *zip(*[(C.coeffs, F, s, e) for s, e in bounds]))
            affine = sum(parts)
    return affine + len(infinity_points(C, F))


def quadratic_extension(p: int) -> Fp2Desc:
    return Fp2Desc(p, smallest_nonresidue(p))


@dataclass(frozen=True)
class LPolynomial:
    """P(T) = 1 + c1 T + c2 T^2 + p c1 T^3 + p^2 T^4."""

    p: int
    c1: int
    c2: int

    def __post_init__(self):
        if self.c1 * self.c1 > 16 * self.p:
            raise NonIntegralC2(f"|c1| = {abs(self.c1)} violates the Weil bound 4*sqrt({self.p})")
        if self(1) <= 0:
            raise NonIntegralC2("P(1) must be positive")

    @property
    def coefficients(self) -> List[int]:
        return [1, self.c1, self.c2, self.p * self.c1, self.p * self.p]

    def __call__(self, t: int) -> int:
        return sum(c * t**i for i, c in enumerate(self.coefficients))

    def count(self, k: int) -> int:
        """N_k = p^k + 1 - sum(alpha_i^k) via Newton's identities."""
        e = [1, -self.c1, self.c2, -self.p * self.c1, self.p * self.p]
        s = [0] * (k + 1)
        for n in range(1, k + 1):
            acc = (-1) ** (n - 1) * n * e[n] if n <= 4 else 0
            for i in range(1, min(n, 5)):
                acc += (-1) ** (i - 1) * e[i] * s[n - i]
            s[n] = acc
        return self.p**k + 1 - s[k]

    def __str__(self):
        return f"1 + ({self.c1})T + ({self.c2})T^2 + ({self.p * self.c1})T^3 + {self.p**2}T^4"


@lru_cache(maxsize=None)
def l_polynomial(C: Genus2Curve, p: int) -> LPolynomial:
    _check_good(C, p)
    n1 = count_points(C, FpDesc(p))
    n2 = count_points(C, quadratic_extension(p))
    c1 = n1 - (p + 1)
    twice_c2 = (p + 1 - n1) ** 2 - (p * p + 1 - n2)
    if twice_c2 % 2:
        raise NonIntegralC2(f"counts N1={n1}, N2={n2} give a half-integral c2")
    return LPolynomial(p, c1, twice_c2 // 2)


def jacobian_order(C: Genus2Curve, p: int, k: int = 1) -> int:
    """|J(F_p)| = P(1) for k = 1 and |J(F_{p^2})| = P(1) P(-1) for k = 2."""
    L = l_polynomial(C, p)
    if k == 1:
        return L(1)
    if k == 2:
        return L(1) * L(-1)
    raise ValueError("only k = 1 and k = 2 are supported")


def strip_prime(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


@dataclass(frozen=True)
class WitnessRecord:
    p: int
    order: int
    prime_to_p: int


@dataclass(frozen=True)
class TorsionBoundReport:
    """Per-witness orders and the resulting bound on |J(K)_tors|.

    ``unbounded`` holds the witness when there is only one: reduction mod p
    says nothing about p-torsion, so the p-part is then unconstrained.
    """

    curve: str
    d: int
    witnesses: Tuple[WitnessRecord, ...]
    bound: int
    unbounded: Tuple[int, ...] = ()

    @property
    def plain_gcd(self) -> int:
        """gcd of the raw orders, without removing p-parts."""
        g = 0
        for w in self.witnesses:
            g = gcd(g, w.order)
        return g

    @property
    def stripped_gcd(self) -> int:
        """gcd of the prime-to-p cofactors (agrees with ``bound`` unless a witness divides it)."""
        g = 0
        for w in self.witnesses:
            g = gcd(g, w.prime_to_p)
        return g

    def to_text(self) -> str:
        lines = ["[torsion_bound]", f"curve = {self.curve}", f"d = {self.d}", f"bound = {self.bound}"]
        lines.append(f"bound_factored = {format_factored(self.bound)}")
        if self.unbounded:
            lines.append(f"unbounded = {','.join(str(p) for p in self.unbounded)}")
        for w in self.witnesses:
            lines += [
                "",
                "[[witness]]",
                f"p = {w.p}",
                f"order = {w.order}",
                f"order_factored = {format_factored(w.order)}",
                f"prime_to_p = {w.prime_to_p}",
            ]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> TorsionBoundReport:
        head: dict = {}
        records: List[dict] = []
        current = head
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line == "[torsion_bound]":
                continue
            if line == "[[witness]]":
                current = {}
                records.append(current)
                continue
            key, _, value = line.partition("=")
            current[key.strip()] = value.strip()
        witnesses = tuple(
            WitnessRecord(int(r["p"]), int(r["order"]), int(r["prime_to_p"])) for r in records
        )
        unbounded = tuple(int(p) for p in head.get("unbounded", "").split(",") if p)
        return cls(head["curve"], int(head["d"]), witnesses, int(head["bound"]), unbounded)


def _valuation(n: int, l: int) -> int:
    k = 0
    while n % l == 0:
        n //= l
        k += 1
    return k


def torsion_bound(C: Genus2Curve, d: int, primes: Sequence[int]) -> TorsionBoundReport:
    """Bound on |J(Q(sqrt d))_tors| from inert primes of good reduction.

    The prime-to-p torsion injects into J(F_{p^2}), so for each prime l the
    l-part is at most l^min(v_l |J(F_{p^2})|) over witnesses p != l.
    """
    primes = list(dict.fromkeys(primes))
    if not primes:
        raise EmptyWitnessList("at least one witness prime is required")
    records = []
    for p in primes:
        _check_good(C, p)
        if not is_inert(p, d):
            raise NotInert(f"{p} is not inert in Q(sqrt {d})")
        order = jacobian_order(C, p, 2)
        records.append(WitnessRecord(p, order, strip_prime(order, p)))
    bound = 1
    for l in sorted({l for w in records for l in factor_integer(w.order)}):
        others = [w.order for w in records if w.p != l]
        if others:
            bound *= l ** min(_valuation(n, l) for n in others)
    # a lone witness p says nothing about p-torsion
    unbounded = tuple(primes) if len(primes) == 1 else ()
    return TorsionBoundReport(C.label, d, tuple(records), bound, unbounded)


def format_factored(n: int) -> str:
    """Factorisation in the style ``7^2 * 19^2``."""
    if n == 1:
        return "1"
    parts = []
    for p, e in sorted(factor_integer(n).items()):
        parts.append(str(p) if e == 1 else f"{p}^{e}")
    return " * ".join(parts)


def weil_bound_ok(L: LPolynomial) -> bool:
    return abs(L.c1) <= 4 * isqrt(L.p) + 4 and L.c1 * L.c1 <= 16 * L.p
