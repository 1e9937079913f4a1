"""Parsing of field elements, polynomials and points from their text form.

Expressions use ``sqrtd`` for sqrt(d), ``x`` for the polynomial variable,
``^`` or ``**`` for powers and may use implicit products like ``2x``.
"""

from __future__ import annotations

import ast
import operator
import re

from .errors import HyperjacError

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}


class ParseError(HyperjacError, ValueError):
    pass


def _normalise(text: str) -> str:
    s = text.strip().replace("^", "**")
    s = re.sub(r"(\d)\s*(x|sqrtd|\()", r"\1*\2", s)
    s = re.sub(r"\)\s*(x|sqrtd|\()", r")*\1", s)
    return s


def evaluate(text: str, field, names: dict):
    try:
        tree = ast.parse(_normalise(text), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}") from exc

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return field(node.value)
        if isinstance(node, ast.Name) and node.id in names:
            return names[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise ParseError("exponents must be integer literals")
            return ev(node.left) ** node.right.value
        raise ParseError(f"unsupported syntax in {text!r}")

    return ev(tree)


def parse_quad(text: str, field):
    """Element of Q or Q(sqrt d) from text such as ``(-1 - sqrtd)/2``."""
    names = {}
    if hasattr(field, "gen"):
        names["sqrtd"] = field.gen
    if hasattr(field, "d") and field.d == -1 and hasattr(field, "gen"):
        names["i"] = field.gen
    return field(evaluate(text, field, names))


def parse_poly(text: str, field):
    """Polynomial in x over ``field`` from text such as ``x^2 - 2x + 1``."""
    from .poly import Poly

    names = {"x": Poly.x(field)}
    if hasattr(field, "gen"):
        names["sqrtd"] = Poly.const(field, field.gen)
    if hasattr(field, "d") and field.d == -1 and hasattr(field, "gen"):
        names["i"] = Poly.const(field, field.gen)

    value = evaluate(text, _PolyField(field), names)
    if not isinstance(value, Poly):
        value = Poly.const(field, value)
    return value


class _PolyField:
    """Coerces integer literals into constant polynomials during parsing."""

    def __init__(self, field):
        self.field = field

    def __call__(self, n):
        from .poly import Poly

        return Poly.const(self.field, n)


def parse_point(item, field):
    """A curve point from ``"inf+"``, ``"inf-"`` or a pair of coordinate strings."""
    from .curve import INF_MINUS, INF_PLUS, AffinePoint

    if isinstance(item, str):
        tag = item.strip().lower()
        if tag in ("inf+", "infinity+", "+inf"):
            return INF_PLUS
        if tag in ("inf-", "infinity-", "-inf"):
            return INF_MINUS
        raise ParseError(f"unknown point {item!r}")
    x, y = item
    return AffinePoint(parse_quad(str(x), field), parse_quad(str(y), field))


def point_to_json(P):
    from .curve import InfinityPoint

    if isinstance(P, InfinityPoint):
        return "inf+" if P.sign > 0 else "inf-"
    return [str(P.x), str(P.y)]
