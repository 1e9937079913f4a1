"""Exact genus-2 Jacobian arithmetic over Q(i), Q(sqrt(-3)) and finite fields, used to
replay the torsion classification argument for two hyperelliptic curves."""

from .curve import C1, C2, AffinePoint, InfinityPoint, INF_MINUS, INF_PLUS, Genus2Curve, make_curve
from .exactfield import QQ, QuadExt, make_quadfield
from .finfield import FpDesc, Fp2Desc, FqElem, make_fp2
from .jacobian import MumfordDivisor, jacobian
from .poly import Poly

__all__ = [
    "C1", "C2", "AffinePoint", "InfinityPoint", "INF_MINUS", "INF_PLUS", "Genus2Curve", "make_curve",
    "QQ", "QuadExt", "make_quadfield", "FpDesc", "Fp2Desc", "FqElem", "make_fp2",
    "MumfordDivisor", "jacobian", "Poly",
]
