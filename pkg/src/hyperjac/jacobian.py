"""Divisor class group of an even-degree genus-2 model y^2 = f(x), deg f = 6.

Representation
--------------
Write D_inf = inf+ + inf-. Every degree-0 class other than zero equals
[E - D_inf] for exactly one effective degree-2 divisor E, and E is never of
the form P + iota(P). A class is stored as a Mumford triple (a, b, d):

* ``a`` is monic of degree <= 2 and cuts out the affine part of E;
* ``d = 2`` is the weight; ``m = d - deg a`` points of E lie at infinity,
  all on the same branch;
* ``b`` has ``b(x) = y`` on the affine part (to the right order). When
  ``m > 0`` its top ``m`` coefficients are the top ``m`` coefficients of the
  polynomial part V of the Puiseux expansion of y on the branch holding the
  infinite points (V = +V+ on inf+, -V+ on inf-); the remaining coefficients
  are the unique correction of degree < deg a. When ``m = 0``, deg b < deg a.

Zero is (1, 0, 0). With f = x^6 - 2x^5 + ... this prints 2*inf+ as
(1, x^3 - x^2, 2) and (0, -1) + inf+ as (x, x^3 - 1, 2).

Internally a class is also carried as (u, v, n+, n-) meaning
[div(u, v) + n+ inf+ + n- inf- - D_inf], with deg u + n+ + n- = 2. Addition is
Cantor composition followed by reduction steps along y - w(x), where w is
chosen to agree with +V+ or -V+ at infinity so the pole orders at inf+ and
inf- (and hence the new infinity counts) are known exactly.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .curve import AffinePoint, CurvePoint, Genus2Curve, InfinityPoint, is_good_prime, is_on_curve
from .errors import (
    BadReduction,
    BadWeight,
    ClosureExceedsBound,
    DegreeViolation,
    FieldMismatch,
    NotClosed,
    NotInert,
    NotOnJacobian,
    OrderExceedsBound,
    PointNotOnCurve,
)
from .exactfield import QuadExt, QuadFieldDesc
from .finfield import Fp2Desc, FpDesc, legendre
from .poly import Poly, poly_xgcd

_MAX_REDUCTION_STEPS = 16


class Jacobian:
    """Group law on J(C)(F) for a genus-2 sextic C whose leading coefficient is a square in F."""

    def __init__(self, curve: Genus2Curve, field):
        self.curve = curve
        self.field = field
        self.f = curve.poly(field)
        s = field.sqrt(field(curve.lc))
        if s is None:
            raise NotOnJacobian(
                f"leading coefficient {curve.lc} is not a square in {field}; "
                "points at infinity are not rational"
            )
        self.vplus = _sqrt_polynomial_part(self.f, s)
        self.identity = MumfordDivisor(self, Poly(field, [1]), Poly(field), 0, Poly(field), 1, 1)

    def __eq__(self, other):
        return isinstance(other, Jacobian) and self.curve == other.curve and self.field == other.field

    def __hash__(self):
        return hash((self.curve, self.field))

    def __repr__(self):
        return f"Jacobian({self.curve.label or self.curve.coeffs}, {self.field!r})"

    def branch_poly(self, sign: int) -> Poly:
        return self.vplus if sign > 0 else -self.vplus

    # -- conversion between the internal and printed forms --------------------

    def _canonical(self, u: Poly, v: Poly, npl: int, nmi: int) -> MumfordDivisor:
        F = self.field
        if u.degree == 0 and npl == 1 and nmi == 1:
            return self.identity
        v = v % u if u.degree > 0 else Poly(F)
        m = npl + nmi
        if m == 0:
            b = v
        else:
            V = self.branch_poly(1 if npl else -1)
            top = Poly(F, [0] * (4 - m) + list(V.coeffs[4 - m:]))
            b = top + ((v - top) % u if u.degree > 0 else Poly(F))
        return MumfordDivisor(self, u, b, 2, v, npl, nmi)

    def _reduce(self, u: Poly, v: Poly, npl: int, nmi: int) -> MumfordDivisor:
        """Bring [div(u, v) + npl inf+ + nmi inf- - D_inf] to reduced form."""
        f = self.f
        for _ in range(_MAX_REDUCTION_STEPS):
            u = u.monic()
            v = v % u if u.degree > 0 else Poly(self.field)
            if u.degree <= 2 and npl >= 0 and nmi >= 0:
                return self._canonical(u, v, npl, nmi)
            best = None
            for sign in (1, -1):
                V = self.branch_poly(sign)
                w = V - ((V - v) % u if u.degree > 0 else Poly(self.field))
                rest = f - w * w
                ut, rem = divmod(rest, u)
                assert not rem, "u must divide f - v^2"
                total = rest.degree
                dp = self.vplus - w
                dm = -self.vplus - w
                if dp and dm:
                    pp, pm = dp.degree, dm.degree
                elif dp:
                    pp = dp.degree
                    pm = total - pp
                else:
                    pm = dm.degree
                    pp = total - pm
                cand = (ut, -w, npl + pp - ut.degree, nmi + pm - ut.degree)
                done = cand[0].degree <= 2 and cand[2] >= 0 and cand[3] >= 0
                score = (done, min(cand[2], cand[3]), -cand[0].degree)
                if best is None or score > best[0]:
                    best = (score, cand)
            u, v, npl, nmi = best[1]
        raise RuntimeError("divisor reduction did not terminate")

    # -- constructors ----------------------------------------------------------

    def poly(self, coeffs) -> Poly:
        if isinstance(coeffs, Poly):
            if coeffs.field != self.field:
                return coeffs.map_coeffs(self.field, self.field)
            return coeffs
        return Poly(self.field, coeffs)

    def make(self, a, b, d: int) -> MumfordDivisor:
        """Validate a printed triple and return its canonical representative."""
        F = self.field
        a, b = self.poly(a), self.poly(b)
        if not a:
            raise DegreeViolation("a must be nonzero")
        a = a.monic()
        if a.degree > 2:
            raise DegreeViolation(f"deg a = {a.degree} > 2")
        if b.degree > 3:
            raise DegreeViolation(f"deg b = {b.degree} > 3")
        if d not in (0, 1, 2) or d < a.degree:
            raise BadWeight(f"weight {d} not allowed with deg a = {a.degree}")
        if (self.f - b * b) % a:
            raise NotOnJacobian(f"a = {a} does not divide b^2 - f")
        m = d - a.degree
        npl = nmi = 0
        if m == 0:
            if b.degree >= a.degree and a.degree > 0 or (a.degree == 0 and b):
                raise DegreeViolation("deg b must be < deg a when no points lie at infinity")
        else:
            if b.degree != 3:
                raise DegreeViolation("deg b must be 3 when the divisor meets infinity")
            sign = 1 if b[3] == self.vplus[3] else -1
            V = self.branch_poly(sign)
            if any(b[k] != V[k] for k in range(4 - m, 4)):
                raise NotOnJacobian(f"b = {b} does not match the branch at infinity")
            if sign > 0:
                npl = m
            else:
                nmi = m
        v = b % a if a.degree > 0 else Poly(F)
        if d == 0:
            return self.identity
        if d == 1:
            # weight one: the class [E - inf+]
            nmi += 1
        return self._reduce(a, v, npl, nmi)

    def point_piece(self, P: CurvePoint) -> Tuple[Poly, Poly, int, int]:
        F = self.field
        if not is_on_curve(self.curve, P, F):
            raise PointNotOnCurve(f"{P} is not on {self.curve.label or self.curve}")
        if isinstance(P, InfinityPoint):
            return Poly(F, [1]), Poly(F), int(P.sign > 0), int(P.sign < 0)
        return Poly(F, [-F(P.x), 1]), Poly(F, [F(P.y)]), 0, 0

    def from_points(self, P: CurvePoint, Q: CurvePoint) -> MumfordDivisor:
        """The class [P + Q - inf+ - inf-]."""
        u1, v1, p1, m1 = self.point_piece(P)
        u2, v2, p2, m2 = self.point_piece(Q)
        u, v, k = self._compose(u1, v1, u2, v2)
        return self._reduce(u, v, p1 + p2 + k, m1 + m2 + k)

    # -- group law -------------------------------------------------------------

    def _compose(self, u1: Poly, v1: Poly, u2: Poly, v2: Poly) -> Tuple[Poly, Poly, int]:
        """Cantor composition; returns (u, v, deg gcd)."""
        d0, e1, e2 = poly_xgcd(u1, u2)
        if d0.degree == 0:
            d, s1, s2, s3 = d0, e1, e2, Poly(self.field)
        else:
            d, c1, c2 = poly_xgcd(d0, v1 + v2)
            s1, s2, s3 = c1 * e1, c1 * e2, c2
        u = (u1 * u2) // (d * d)
        v = (s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + self.f)) // d
        v = v % u if u.degree > 0 else Poly(self.field)
        return u, v, d.degree

    def add(self, D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
        if D1.jac != self or D2.jac != self:
            raise FieldMismatch("divisors belong to different Jacobians")
        if D1.is_zero():
            return D2
        if D2.is_zero():
            return D1
        u, v, k = self._compose(D1.u, D1.v, D2.u, D2.v)
        return self._reduce(u, v, D1.n_plus + D2.n_plus + k - 1, D1.n_minus + D2.n_minus + k - 1)

    def neg(self, D: MumfordDivisor) -> MumfordDivisor:
        if D.is_zero():
            return D
        return self._canonical(D.u, -D.v, D.n_minus, D.n_plus)

    def scalar(self, n: int, D: MumfordDivisor) -> MumfordDivisor:
        if n < 0:
            return self.neg(self.scalar(-n, D))
        result, base = self.identity, D
        while n:
            if n & 1:
                result = self.add(result, base)
            n >>= 1
            if n:
                base = self.add(base, base)
        return result

    def elements(self) -> List[MumfordDivisor]:
        """Every element of J(F_q), by listing all reduced triples (finite fields only)."""
        F = self.field
        if not getattr(F, "is_finite", False):
            raise ValueError("exhaustive listing needs a finite field")
        out = [self.identity]
        out.append(self._canonical(Poly(F, [1]), Poly(F), 2, 0))
        out.append(self._canonical(Poly(F, [1]), Poly(F), 0, 2))
        elems = list(F.elements())
        for x0 in elems:
            fx = self.f(x0)
            for y0 in elems:
                if y0 * y0 == fx:
                    u = Poly(F, [-x0, 1])
                    v = Poly(F, [y0])
                    out.append(self._canonical(u, v, 1, 0))
                    out.append(self._canonical(u, v, 0, 1))
        for c0 in elems:
            for c1 in elems:
                u = Poly(F, [c0, c1, 1])
                for v0 in elems:
                    for v1 in elems:
                        v = Poly(F, [v0, v1])
                        if not (self.f - v * v) % u:
                            out.append(self._canonical(u, v, 0, 0))
        return out


def _sqrt_polynomial_part(f: Poly, s) -> Poly:
    """Polynomial part V of sqrt(f) at infinity with leading coefficient s (deg f = 6)."""
    F = f.field
    c = [F.zero] * 4
    c[3] = s
    two_s = s + s
    for k in (2, 1, 0):
        # coefficient of x^(3+k) in V^2 must equal f's
        acc = F.zero
        for i in range(k + 1, 4):
            j = 3 + k - i
            if k < j <= 3:
                acc = acc + c[i] * c[j]
        c[k] = (f[3 + k] - acc) / two_s
    V = Poly(F, c)
    assert (f - V * V).degree <= 2
    return V


class MumfordDivisor:
    """A reduced divisor class, printed as the triple (a, b, d)."""

    __slots__ = ("jac", "a", "b", "d", "v", "n_plus", "n_minus")

    def __init__(self, jac, a: Poly, b: Poly, d: int, v: Poly, n_plus: int, n_minus: int):
        self.jac = jac
        self.a = a
        self.b = b
        self.d = d
        self.v = v
        self.n_plus = n_plus
        self.n_minus = n_minus

    @property
    def u(self) -> Poly:
        return self.a

    def is_zero(self) -> bool:
        return self.d == 0

    def key(self) -> tuple:
        return (self.a.coeffs, self.b.coeffs, self.d)

    def __eq__(self, other):
        if not isinstance(other, MumfordDivisor):
            return NotImplemented
        return self.key() == other.key() and self.jac.curve == other.jac.curve

    def __hash__(self):
        return hash(self.key())

    def __add__(self, other):
        return self.jac.add(self, other)

    def __neg__(self):
        return self.jac.neg(self)

    def __sub__(self, other):
        return self.jac.add(self, self.jac.neg(other))

    def __rmul__(self, n: int):
        return self.jac.scalar(n, self)

    def infinity_part(self) -> Dict[int, int]:
        return {1: self.n_plus, -1: self.n_minus} if not self.is_zero() else {1: 0, -1: 0}

    def sort_key(self):
        def ck(c):
            return c.sort_key() if hasattr(c, "sort_key") else (c, 0)

        return (
            self.d,
            self.a.degree,
            [ck(c) for c in self.a.coeffs],
            self.b.degree,
            [ck(c) for c in self.b.coeffs],
        )

    def __repr__(self):
        return f"({self.a}, {self.b}, {self.d})"

    __str__ = __repr__

    def to_record(self) -> dict:
        return {
            "a": [str(c) for c in self.a.coeffs] or ["0"],
            "b": [str(c) for c in self.b.coeffs] or ["0"],
            "d": self.d,
        }

    def to_text(self) -> str:
        r = self.to_record()
        return f"a = [{', '.join(r['a'])}]\nb = [{', '.join(r['b'])}]\nd = {r['d']}\n"


# -- module-level API ----------------------------------------------------------


@lru_cache(maxsize=None)
def jacobian(curve: Genus2Curve, field) -> Jacobian:
    return Jacobian(curve, field)


def mumford_make(a, b, d: int, C: Genus2Curve, field) -> MumfordDivisor:
    return jacobian(C, field).make(a, b, d)


def divisor_from_points(P: CurvePoint, Q: CurvePoint, C: Genus2Curve, field) -> MumfordDivisor:
    return jacobian(C, field).from_points(P, Q)


def jac_add(D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
    return D1.jac.add(D1, D2)


def jac_neg(D: MumfordDivisor) -> MumfordDivisor:
    return D.jac.neg(D)


def scalar_mul(n: int, D: MumfordDivisor) -> MumfordDivisor:
    return D.jac.scalar(n, D)


def divisors_of(n: int) -> List[int]:
    small = [k for k in range(1, int(n**0.5) + 1) if n % k == 0]
    return sorted(set(small + [n // k for k in small]))


def element_order(D: MumfordDivisor, bound: int) -> int:
    """Least n >= 1 with n*D = 0, searched among the divisors of ``bound``."""
    for n in divisors_of(bound):
        if scalar_mul(n, D).is_zero():
            return n
    raise OrderExceedsBound(f"order of {D} does not divide {bound}")


def subgroup_closure(generators: Sequence[MumfordDivisor], bound: int, jac: Optional[Jacobian] = None) -> List[MumfordDivisor]:
    """All elements of the subgroup generated by ``generators``, zero first."""
    if jac is None:
        if not generators:
            raise ValueError("need a Jacobian when no generators are given")
        jac = generators[0].jac
    gens = list(dict.fromkeys(g for g in generators if not g.is_zero()))
    seen = {jac.identity: None}
    frontier = [jac.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = jac.add(x, g)
                if y not in seen:
                    seen[y] = None
                    if len(seen) > bound:
                        raise ClosureExceedsBound(f"closure exceeds {bound} elements")
                    nxt.append(y)
        frontier = nxt
    rest = sorted((e for e in seen if not e.is_zero()), key=lambda e: e.sort_key())
    return [jac.identity] + rest


def group_structure(elements: Sequence[MumfordDivisor]) -> List[int]:
    """Invariant factors n1 | n2 | ... of the finite abelian group formed by ``elements``."""
    elems = list(dict.fromkeys(elements))
    if not elems:
        raise NotClosed("empty set is not a group")
    jac = elems[0].jac
    members = set(elems)
    if jac.identity not in members:
        raise NotClosed("identity missing")
    # grow the subgroup H generated by a greedy subset of the elements;
    # H must stay inside the set and eventually cover it
    gens: List[MumfordDivisor] = []
    H = {jac.identity}
    for s in elems:
        if s in H:
            continue
        gens.append(s)
        try:
            H = set(subgroup_closure(gens, len(members), jac))
        except ClosureExceedsBound as exc:
            raise NotClosed("elements generate a larger group") from exc
        if not H <= members:
            raise NotClosed("elements do not form a group")
    N = len(elems)
    orders = [element_order(e, N) for e in elems]
    return invariant_factors(orders)


def invariant_factors(orders: Sequence[int]) -> List[int]:
    """Invariant factors of a finite abelian group given the order of every element."""
    from .curve import factor_integer

    N = len(orders)
    if N == 1:
        return []
    per_prime: Dict[int, List[int]] = {}
    for p, e in factor_integer(N).items():
        # rank[k] = log_p #{g : p^k g = 0}
        rank = []
        for k in range(e + 1):
            count = sum(1 for o in orders if (p**k) % o == 0)
            r = 0
            while p**r < count:
                r += 1
            assert p**r == count
            rank.append(r)
        # number of cyclic p-factors of order >= p^k is rank[k] - rank[k-1]
        at_least = [rank[k] - rank[k - 1] for k in range(1, e + 1)] + [0]
        exps = []
        for k in range(1, e + 1):
            exps += [k] * (at_least[k - 1] - at_least[k])
        per_prime[p] = sorted(exps, reverse=True)
    length = max(len(v) for v in per_prime.values())
    factors = []
    for i in range(length):
        n = 1
        for p, exps in per_prime.items():
            if i < len(exps):
                n *= p ** exps[i]
        factors.append(n)
    return sorted(factors)


def _reduce_coefficient(c, target):
    if isinstance(c, QuadExt):
        return target(c.a, c.b)
    return target(c)


def reduce_divisor(D: MumfordDivisor, p: int, target) -> MumfordDivisor:
    """Coefficient-wise reduction of a divisor over Q or Q(sqrt d) into F_p or F_p(sqrt d)."""
    src = D.jac.field
    C = D.jac.curve
    if not is_good_prime(C, p):
        raise BadReduction(f"{p} is a bad prime for {C.label or C}")
    if target.p != p:
        raise FieldMismatch(f"target field has characteristic {target.p}, not {p}")
    if isinstance(src, QuadFieldDesc):
        if not isinstance(target, Fp2Desc) or target.d != src.d:
            raise FieldMismatch(f"Q(sqrt {src.d}) must reduce into F_p(sqrt {src.d})")
        if legendre(src.d, p) != -1:
            raise NotInert(f"{p} is not inert in Q(sqrt {src.d})")
    J = jacobian(C, target)
    if D.is_zero():
        return J.identity
    u = D.u.map_coeffs(lambda c: _reduce_coefficient(c, target), target)
    v = D.v.map_coeffs(lambda c: _reduce_coefficient(c, target), target)
    return J._reduce(u, v, D.n_plus, D.n_minus)


def extract_points(D: MumfordDivisor, roots_fn) -> List[AffinePoint]:
    """Affine points (x0, b(x0)) for the roots x0 of a that ``roots_fn`` finds."""
    if D.a.degree < 1:
        return []
    return [AffinePoint(x0, D.b(x0)) for x0 in dict.fromkeys(roots_fn(D.a))]
