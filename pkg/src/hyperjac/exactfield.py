"""Exact base fields: the rationals and quadratic extensions Q(sqrt d).

Elements of Q are plain :class:`fractions.Fraction` values (always reduced,
denominator positive). Elements of Q(sqrt d) are :class:`QuadExt` values
a + b*sqrt(d) over the basis {1, sqrt d}.

Both field objects share a small duck-typed protocol used by the polynomial
and Jacobian code: ``zero``, ``one``, ``__call__`` (coercion), ``sqrt``,
``is_square`` and ``characteristic``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational as _RationalABC
from typing import Optional, Union

from .errors import DegenerateRadicand, FieldMismatch, NotSquarefree

Rational = Fraction

# symbol used for sqrt(d) in configs and serialized divisors
SQRT_SYMBOL = "sqrtd"


def rational_sqrt(r) -> Optional[Fraction]:
    """Non-negative rational square root of ``r``, or None if r is not a square."""
    r = Fraction(r)
    if r < 0:
        return None
    n, d = r.numerator, r.denominator
    sn, sd = isqrt(n), isqrt(d)
    if sn * sn == n and sd * sd == d:
        return Fraction(sn, sd)
    return None


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        if n % k == 0:
            n //= k
        k += 1
    return True


class RationalField:
    """The field Q; its elements are Fractions."""

    characteristic = 0
    is_finite = False
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, QuadExt):
            if x.b != 0:
                raise FieldMismatch(f"{x} is not rational")
            return x.a
        if isinstance(x, (int, _RationalABC)):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise FieldMismatch(f"cannot coerce {x!r} into Q")

    def sqrt(self, x) -> Optional[Fraction]:
        return rational_sqrt(x)

    def is_square(self, x) -> bool:
        return rational_sqrt(x) is not None

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


QQ = RationalField()


@dataclass(frozen=True)
class QuadFieldDesc:
    """Q(sqrt d) for a squarefree radicand d not in {0, 1}.

    Calling the descriptor builds elements: ``K(a, b)`` is a + b*sqrt(d).
    """

    d: int

    characteristic = 0
    is_finite = False

    def __post_init__(self):
        if self.d in (0, 1):
            raise DegenerateRadicand(f"radicand {self.d} does not give a quadratic field")
        if not is_squarefree(self.d):
            raise NotSquarefree(f"radicand {self.d} is not squarefree")

    @property
    def zero(self) -> QuadExt:
        return QuadExt(self, Fraction(0), Fraction(0))

    @property
    def one(self) -> QuadExt:
        return QuadExt(self, Fraction(1), Fraction(0))

    @property
    def gen(self) -> QuadExt:
        """sqrt(d) itself."""
        return QuadExt(self, Fraction(0), Fraction(1))

    def __call__(self, a=0, b=0) -> QuadExt:
        if isinstance(a, QuadExt):
            if a.field != self:
                raise FieldMismatch(f"{a} lives in Q(sqrt {a.field.d}), not Q(sqrt {self.d})")
            return a if b == 0 else a + self.gen * b
        if isinstance(a, str):
            from .serialize import parse_quad

            return parse_quad(a, self)
        return QuadExt(self, Fraction(a), Fraction(b))

    def sqrt(self, x) -> Optional[QuadExt]:
        return quad_sqrt(self(x))

    def is_square(self, x) -> bool:
        return quad_sqrt(self(x)) is not None

    def __repr__(self):
        return "Q(i)" if self.d == -1 else f"Q(sqrt({self.d}))"


def make_quadfield(d: int) -> QuadFieldDesc:
    return QuadFieldDesc(int(d))


class QuadExt:
    """Immutable element a + b*sqrt(d) of Q(sqrt d).

    Stored as integers (A, B, D) with a = A/D, b = B/D, D > 0 and
    gcd(A, B, D) = 1, so equal values have identical coordinates.
    """

    __slots__ = ("field", "_A", "_B", "_D")

    def __init__(self, field: QuadFieldDesc, a, b):
        a, b = Fraction(a), Fraction(b)
        den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        self._set(field, a.numerator * (den // a.denominator), b.numerator * (den // b.denominator), den)

    def _set(self, field, A: int, B: int, D: int):
        g = gcd(gcd(A, B), D)
        if g != 1:
            A, B, D = A // g, B // g, D // g
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_A", A)
        object.__setattr__(self, "_B", B)
        object.__setattr__(self, "_D", D)

    @classmethod
    def _raw(cls, field, A: int, B: int, D: int) -> QuadExt:
        obj = cls.__new__(cls)
        if D < 0:
            A, B, D = -A, -B, -D
        obj._set(field, A, B, D)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @property
    def a(self) -> Fraction:
        return Fraction(self._A, self._D)

    @property
    def b(self) -> Fraction:
        return Fraction(self._B, self._D)

    def _coerce(self, other) -> Optional[QuadExt]:
        if isinstance(other, QuadExt):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("mixing elements of different quadratic fields")
            return other
        if isinstance(other, int):
            return QuadExt._raw(self.field, other, 0, 1)
        if isinstance(other, _RationalABC):
            other = Fraction(other)
            return QuadExt._raw(self.field, other.numerator, 0, other.denominator)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._D == o._D:
            return QuadExt._raw(self.field, self._A + o._A, self._B + o._B, self._D)
        return QuadExt._raw(
            self.field, self._A * o._D + o._A * self._D, self._B * o._D + o._B * self._D, self._D * o._D
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._raw(self.field, -self._A, -self._B, self._D)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        A1, B1, A2, B2 = self._A, self._B, o._A, o._B
        return QuadExt._raw(
            self.field, A1 * A2 + self.field.d * B1 * B2, A1 * B2 + B1 * A2, self._D * o._D
        )

    __rmul__ = __mul__

    def conj(self) -> QuadExt:
        return QuadExt._raw(self.field, self._A, -self._B, self._D)

    def norm(self) -> Fraction:
        return Fraction(self._A * self._A - self.field.d * self._B * self._B, self._D * self._D)

    def trace(self) -> Fraction:
        return Fraction(2 * self._A, self._D)

    def inverse(self) -> QuadExt:
        # 1/(A + B s)/D = D (A - B s) / (A^2 - d B^2)
        n = self._A * self._A - self.field.d * self._B * self._B
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt d)")
        return QuadExt._raw(self.field, self._D * self._A, -self._D * self._B, n)

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
        return bool(self._A) or bool(self._B)

    def is_rational(self) -> bool:
        return self._B == 0

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except FieldMismatch:
            return False
        if o is None:
            return NotImplemented
        return self._A == o._A and self._B == o._B and self._D == o._D

    def __hash__(self):
        if self._B == 0:
            return hash(Fraction(self._A, self._D))
        return hash((self.field.d, self._A, self._B, self._D))

    def sort_key(self):
        return (self.a, self.b)

    def __repr__(self):
        return f"QuadExt(d={self.field.d}, {self.a}, {self.b})"

    def __str__(self):
        return format_quad(self)

    def pretty(self) -> str:
        return format_quad(self, symbol="i" if self.field.d == -1 else f"√{self.field.d}")


def format_quad(x: QuadExt, symbol: str = SQRT_SYMBOL) -> str:
    """Render as ``(u + v*s)/w`` with integers u, v, w; parseable by serialize.parse_quad."""
    a, b = x.a, x.b
    if b == 0:
        return str(a)
    w = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    u, v = int(a * w), int(b * w)
    if v == 1:
        tail = symbol
    elif v == -1:
        tail = f"-{symbol}"
    else:
        tail = f"{v}*{symbol}"
    if u == 0:
        body = tail
    else:
        body = f"{u} - {tail[1:]}" if tail.startswith("-") else f"{u} + {tail}"
    if w == 1:
        return body
    return f"({body})/{w}"


def quad_sqrt(x: QuadExt) -> Optional[QuadExt]:
    """A square root of x in Q(sqrt d), or None when x is not a square there.

    Writes the root as u + v*sqrt(d) and solves u^2 + d v^2 = a, 2uv = b.
    """
    K = x.field
    a, b, d = x.a, x.b, K.d
    if b == 0:
        r = rational_sqrt(a)
        if r is not None:
            return QuadExt(K, r, 0)
        r = rational_sqrt(a / d)
        if r is not None:
            return QuadExt(K, 0, r)
        return None
    # u^2 is a root of t^2 - a t + d b^2/4, so u^2 = (a +- sqrt(norm))/2
    n = rational_sqrt(a * a - d * b * b)
    if n is None:
        return None
    for u2 in ((a + n) / 2, (a - n) / 2):
        u = rational_sqrt(u2)
        if u:
            return QuadExt(K, u, b / (2 * u))
    return None


Scalar = Union[int, Fraction, QuadExt]
