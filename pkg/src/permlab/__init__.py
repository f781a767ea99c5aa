"""Exact workbench for permanental ideals, Groebner membership and nowhere-zero vector searches."""

from .scalars import QQ, QQI, Field, FieldError, Scalar, field_parse, scalar_arith
from .polyring import Poly, PolyRing, PolySyntaxError, generic_ring, parse_poly

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "QQI",
    "Field",
    "FieldError",
    "Scalar",
    "field_parse",
    "scalar_arith",
    "Poly",
    "PolyRing",
    "PolySyntaxError",
    "generic_ring",
    "parse_poly",
]
