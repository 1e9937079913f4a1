"""Dense univariate polynomials over the package's fields.

Coefficients are stored constant term first. The zero polynomial has
``degree == -1`` (standing in for minus infinity).
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

from .errors import DegreeOutOfRange, DivisionByZeroPoly, ScanBoundExceeded, FieldMismatch

SCAN_BOUND = 10**6


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: Iterable = ()):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls, field) -> Poly:
        return cls(field, [0, 1])

    @classmethod
    def const(cls, field, c) -> Poly:
        return cls(field, [c])

    @classmethod
    def monomial(cls, field, c, n: int) -> Poly:
        return cls(field, [0] * n + [c])

    @classmethod
    def from_roots(cls, field, roots) -> Poly:
        out = cls(field, [1])
        for r in roots:
            out = out * cls(field, [-field(r), 1])
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch(f"polynomials over {self.field} and {other.field}")
            return other
        return Poly(self.field, [other])

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self.field, [self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self.field, [self[i] - o[i] for i in range(n)])

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return Poly(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        out = Poly(self.field, [1])
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        return poly_divmod(self, self._coerce(other))

    def __floordiv__(self, other):
        return poly_divmod(self, self._coerce(other))[0]

    def __mod__(self, other):
        return poly_divmod(self, self._coerce(other))[1]

    def __truediv__(self, other):
        # exact division by a nonzero constant only
        if isinstance(other, Poly):
            if other.degree != 0:
                return NotImplemented
            other = other.coeffs[0]
        return self.scale(self.field.one / self.field(other))

    def scale(self, c) -> Poly:
        return Poly(self.field, [a * c for a in self.coeffs])

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        return self.scale(self.field.one / self.lc())

    def derivative(self) -> Poly:
        return Poly(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map_coeffs(self, func, field) -> Poly:
        return Poly(field, [func(c) for c in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            return self == self._coerce(other)
        except (FieldMismatch, TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({self.field!r}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_poly(self)


def _coeff_str(c) -> str:
    s = c.pretty() if hasattr(c, "pretty") else str(c)
    return s


def format_poly(f: Poly, var: str = "x") -> str:
    """Human-readable form, highest degree first, e.g. ``x^2 - 2*x + 1``."""
    if not f.coeffs:
        return "0"
    terms: List[str] = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        cs = _coeff_str(c)
        simple = not any(ch in cs.lstrip("-") for ch in "+- ") and "(" not in cs
        neg = cs.startswith("-") and simple
        mag = cs[1:] if neg else cs
        if not simple:
            mag = f"({cs})"
        if i == 0:
            body = mag
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == "1" else f"{mag}*{mono}"
        if not terms:
            terms.append(f"-{body}" if neg else body)
        else:
            terms.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(terms)


def poly_divmod(f: Poly, g: Poly) -> Tuple[Poly, Poly]:
    """Quotient and remainder with f = q*g + r, deg r < deg g."""
    if not g.coeffs:
        raise DivisionByZeroPoly("division by the zero polynomial")
    F = f.field
    r = list(f.coeffs)
    dg = g.degree
    inv = F.one / g.lc()
    q = [F.zero] * max(len(r) - dg, 0)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if not c:
            continue
        c = c * inv
        q[k - dg] = c
        for j, b in enumerate(g.coeffs):
            r[k - dg + j] = r[k - dg + j] - c * b
    return Poly(F, q), Poly(F, r[:dg] if dg > 0 else [])


def poly_xgcd(f: Poly, g: Poly) -> Tuple[Poly, Poly, Poly]:
    """Monic d = gcd(f, g) with cofactors s, t such that s*f + t*g = d."""
    F = f.field
    r0, r1 = f, g
    s0, s1 = Poly(F, [1]), Poly(F)
    t0, t1 = Poly(F), Poly(F, [1])
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = F.one / r0.lc()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    if not f and not g:
        raise DivisionByZeroPoly("gcd(0, 0) is undefined")
    return poly_xgcd(f, g)[0]


def _det(rows: List[list], field):
    """Determinant by Gaussian elimination over a field."""
    m = [list(r) for r in rows]
    n = len(m)
    det = field.one
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            return field.zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        pv = m[col][col]
        det = det * pv
        inv = field.one / pv
        for i in range(col + 1, n):
            if m[i][col]:
                factor = m[i][col] * inv
                for j in range(col, n):
                    m[i][j] = m[i][j] - factor * m[col][j]
    return det


def sylvester_matrix(f: Poly, g: Poly) -> List[list]:
    m, n = f.degree, g.degree
    F = f.field
    size = m + n
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([F.zero] * i + fc + [F.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([F.zero] * i + gc + [F.zero] * (size - n - 1 - i))
    return rows


def poly_resultant(f: Poly, g: Poly):
    if not f or not g:
        return f.field.zero
    if f.degree == 0 and g.degree == 0:
        return f.field.one
    return _det(sylvester_matrix(f, g), f.field)


def poly_discriminant(f: Poly):
    """disc(f) = (-1)^(n(n-1)/2) * res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise DegreeOutOfRange("discriminant needs degree >= 1")
    if n == 1:
        return f.field.one
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return poly_resultant(f, f.derivative()) * sign / f.lc()


def roots_deg_le2_exact(f: Poly) -> List:
    """Roots of f (degree 1 or 2) in its own exact field, repeated by multiplicity."""
    if not 1 <= f.degree <= 2:
        raise DegreeOutOfRange(f"expected degree 1 or 2, got {f.degree}")
    F = f.field
    if f.degree == 1:
        return [-f[0] / f[1]]
    a, b, c = f[2], f[1], f[0]
    disc = b * b - 4 * a * c
    s = F.sqrt(disc)
    if s is None:
        return []
    r1 = (-b + s) / (2 * a)
    r2 = (-b - s) / (2 * a)
    return sorted([r1, r2], key=_sort_key)


def _sort_key(x):
    return x.sort_key() if hasattr(x, "sort_key") else (x, 0)


def roots_brute_fq(f: Poly) -> List:
    """All roots of f in its finite field, by evaluating at every element."""
    F = f.field
    if F.order > SCAN_BOUND:
        raise ScanBoundExceeded(f"field of size {F.order} exceeds scan bound {SCAN_BOUND}")
    return [x for x in F.elements() if not f(x)]


def poly_from_ints(field, coeffs: Sequence[int]) -> Poly:
    return Poly(field, coeffs)
