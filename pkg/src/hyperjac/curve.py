"""Genus-2 curves y^2 = f(x) with deg f = 6, their points, twists and reduction data."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .errors import (
    DegenerateRadicand,
    NotSquarefree,
    Ramified,
    SingularModel,
    WrongDegree,
)
from .exactfield import QQ, is_squarefree
from .finfield import legendre
from .poly import Poly, poly_discriminant


@dataclass(frozen=True)
class AffinePoint:
    x: object
    y: object

    def sort_key(self):
        return (1, _key(self.x), _key(self.y))

    def __str__(self):
        return f"({_pretty(self.x)}, {_pretty(self.y)})"


@dataclass(frozen=True)
class InfinityPoint:
    sign: int  # +1 or -1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("infinity sign must be +1 or -1")

    def sort_key(self):
        return (0, -self.sign)

    def __str__(self):
        return "inf+" if self.sign > 0 else "inf-"


CurvePoint = Union[AffinePoint, InfinityPoint]

INF_PLUS = InfinityPoint(1)
INF_MINUS = InfinityPoint(-1)


def _key(x):
    return x.sort_key() if hasattr(x, "sort_key") else (Fraction(x), 0)


def _pretty(x):
    return x.pretty() if hasattr(x, "pretty") else str(x)


@dataclass(frozen=True)
class Genus2Curve:
    """y^2 = c0 + c1 x + ... + c6 x^6 with integer coefficients."""

    coeffs: Tuple[int, ...]
    label: str = ""

    def poly(self, field=QQ) -> Poly:
        return Poly(field, self.coeffs)

    @property
    def lc(self) -> int:
        return self.coeffs[6]

    def discriminant(self) -> int:
        disc = poly_discriminant(self.poly(QQ))
        assert disc.denominator == 1
        return int(disc)

    def __str__(self):
        name = self.label or "C"
        return f"{name}: y^2 = {self.poly()}"


def make_curve(coeffs: Sequence[int], label: str = "") -> Genus2Curve:
    cs = tuple(int(c) for c in coeffs)
    if len(cs) != 7 or cs[6] == 0:
        raise WrongDegree(f"expected 7 coefficients c0..c6 with c6 != 0, got {list(coeffs)}")
    C = Genus2Curve(cs, label)
    if C.discriminant() == 0:
        raise SingularModel(f"{list(cs)} has a repeated root")
    return C


def is_on_curve(C: Genus2Curve, P: CurvePoint, F=QQ) -> bool:
    if isinstance(P, InfinityPoint):
        return F.is_square(F(C.lc))
    f = C.poly(F)
    x, y = F(P.x), F(P.y)
    return y * y == f(x)


def infinity_points(C: Genus2Curve, F=QQ) -> List[InfinityPoint]:
    """Both points at infinity when lc(f) is a square in F, otherwise none."""
    if F.is_square(F(C.lc)):
        return [INF_PLUS, INF_MINUS]
    return []


def factor_integer(n: int) -> dict:
    """Prime factorisation of |n| by trial division."""
    n = abs(n)
    out: dict = {}
    if n == 0:
        raise ValueError("cannot factor 0")
    k = 2
    while k * k <= n:
        while n % k == 0:
            out[k] = out.get(k, 0) + 1
            n //= k
        k += 1 if k == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def bad_primes(C: Genus2Curve) -> set:
    """{2} together with every odd prime dividing disc(f)."""
    return {2} | {p for p in factor_integer(C.discriminant()) if p != 2}


def twist(C: Genus2Curve, d: int) -> Genus2Curve:
    """Quadratic twist y^2 = d*f(x)."""
    if d in (0, 1):
        raise DegenerateRadicand(f"cannot twist by {d}")
    if not is_squarefree(d):
        raise NotSquarefree(f"twist parameter {d} is not squarefree")
    label = f"{C.label}^({d})" if C.label else ""
    return make_curve([d * c for c in C.coeffs], label)


def is_inert(p: int, d: int) -> bool:
    """Whether the odd prime p stays prime in Q(sqrt d)."""
    if d % p == 0:
        raise Ramified(f"{p} divides {d}")
    return legendre(d, p) == -1


def is_good_prime(C: Genus2Curve, p: int) -> bool:
    return p not in bad_primes(C) and C.lc % p != 0


C1 = make_curve((1, -4, 6, -2, 1, -2, 1), "C1")
C2 = make_curve((1, 4, 10, 10, 5, 2, 1), "C2")

CURVES = {"C1": C1, "C2": C2}
