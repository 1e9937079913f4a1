"""Prime fields F_p and quadratic extensions F_p(sqrt d) for odd p."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterator, Optional

from .errors import DenominatorDivisibleByP, FieldMismatch, NotInert, NotPrime


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def _check_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) by Euler's criterion."""
    _check_odd_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def sqrt_mod_p(a: int, p: int) -> Optional[int]:
    """Smallest square root of a modulo p (Tonelli-Shanks), None for non-residues."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return min(r, p - r)


class _FiniteField:
    p: int
    d: int  # 0 for the prime field
    degree: int

    characteristic = property(lambda self: self.p)
    is_finite = True

    @property
    def order(self) -> int:
        return self.p**self.degree

    @property
    def zero(self) -> FqElem:
        return FqElem(self, 0, 0)

    @property
    def one(self) -> FqElem:
        return FqElem(self, 1, 0)

    def element(self, index: int) -> FqElem:
        """The index-th element in the fixed enumeration order a + b*p."""
        return FqElem(self, index % self.p, index // self.p)

    def elements(self) -> Iterator[FqElem]:
        for i in range(self.order):
            yield self.element(i)

    def __call__(self, a=0, b=0) -> FqElem:
        if isinstance(a, FqElem):
            if a.field != self:
                if a.field.p == self.p and a.b == 0:
                    return FqElem(self, a.a, 0)
                raise FieldMismatch(f"{a} is not in {self}")
            return a
        return FqElem(self, self._reduce(a), self._reduce(b))

    def _reduce(self, x) -> int:
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, _RationalABC):
            x = Fraction(x)
            if x.denominator % self.p == 0:
                raise DenominatorDivisibleByP(f"denominator of {x} is divisible by {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        raise FieldMismatch(f"cannot coerce {x!r} into {self}")

    def is_square(self, x) -> bool:
        return is_square_fq(self(x))


@dataclass(frozen=True)
class FpDesc(_FiniteField):
    """The prime field F_p, p odd."""

    p: int

    d = 0
    degree = 1

    def __post_init__(self):
        _check_odd_prime(self.p)

    def sqrt(self, x) -> Optional[FqElem]:
        r = sqrt_mod_p(self(x).a, self.p)
        return None if r is None else FqElem(self, r, 0)

    def __repr__(self):
        return f"F_{self.p}"


@dataclass(frozen=True)
class Fp2Desc(_FiniteField):
    """F_{p^2} realised as F_p(sqrt d) with d a non-residue mod p."""

    p: int
    d: int

    degree = 2

    def __post_init__(self):
        _check_odd_prime(self.p)
        if legendre(self.d, self.p) != -1:
            raise NotInert(f"{self.d} is not a non-residue mod {self.p}")

    @property
    def gen(self) -> FqElem:
        return FqElem(self, 0, 1)

    @property
    def base(self) -> FpDesc:
        return FpDesc(self.p)

    def sqrt(self, x) -> Optional[FqElem]:
        x = self(x)
        p, d = self.p, self.d
        a, b = x.a, x.b
        if b == 0:
            r = sqrt_mod_p(a, p)
            if r is not None:
                return FqElem(self, r, 0)
            # a/d is then a residue and sqrt(a) = sqrt(a/d) * sqrt(d)
            r = sqrt_mod_p(a * pow(d, -1, p), p)
            return FqElem(self, 0, r)
        n = sqrt_mod_p((a * a - d * b * b) % p, p)
        if n is None:
            return None
        inv2 = pow(2, -1, p)
        for u2 in ((a + n) * inv2, (a - n) * inv2):
            u = sqrt_mod_p(u2, p)
            if u:
                return FqElem(self, u, b * pow(2 * u, -1, p))
        return None

    def __repr__(self):
        return f"F_{self.p}^2(sqrt {self.d})"


def make_fp(p: int) -> FpDesc:
    return FpDesc(p)


def make_fp2(p: int, d: int) -> Fp2Desc:
    return Fp2Desc(p, d)


def smallest_nonresidue(p: int) -> int:
    d = 2
    while legendre(d, p) != -1:
        d += 1
    return d


class FqElem:
    """Element a + b*sqrt(d) of a finite field; b is always 0 in F_p."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: _FiniteField, a: int, b: int = 0):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "a", a % field.p)
        object.__setattr__(self, "b", b % field.p)

    def __setattr__(self, name, value):
        raise AttributeError("FqElem is immutable")

    def _coerce(self, other) -> Optional[FqElem]:
        if isinstance(other, FqElem):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("mixing elements of different finite fields")
            return other
        if isinstance(other, (int, _RationalABC)):
            return FqElem(self.field, self.field._reduce(other), 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FqElem(self.field, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return FqElem(self.field, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FqElem(self.field, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.b == 0 and o.b == 0:
            return FqElem(self.field, self.a * o.a, 0)
        d = self.field.d
        return FqElem(self.field, self.a * o.a + d * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conj(self) -> FqElem:
        return FqElem(self.field, self.a, -self.b)

    def norm(self) -> int:
        return (self.a * self.a - self.field.d * self.b * self.b) % self.field.p

    def inverse(self) -> FqElem:
        p = self.field.p
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.field}")
        ni = pow(n, -1, p)
        return FqElem(self.field, self.a * ni, -self.b * ni)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except FieldMismatch:
            return False
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.field.p))

    def sort_key(self):
        return (self.a, self.b)

    def __repr__(self):
        return f"FqElem({self.field!r}, {self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        s = "s" if self.b == 1 else f"{self.b}*s"
        return s if self.a == 0 else f"{self.a} + {s}"


def is_square_fq(x: FqElem) -> bool:
    """Euler's criterion in F_q: x^((q-1)/2) == 1, with 0 counted as a square."""
    if not x:
        return True
    q = x.field.order
    return x ** ((q - 1) // 2) == 1


def square_table(F: _FiniteField) -> set:
    """Set of all squares of F as (a, b) coordinate pairs, zero included."""
    out = set()
    for x in F.elements():
        y = x * x
        out.add((y.a, y.b))
    return out
