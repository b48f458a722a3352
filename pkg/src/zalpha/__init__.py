"""Exact arithmetic in real algebraic number fields, Bareiss elimination and integral LLL."""

from .errors import *  # noqa: F401,F403
from .field import AlgebraicInt, FieldDescriptor, InverseRep, field_from_polynomial, field_new, opc
from . import arith

__all__ = [
    "AlgebraicInt",
    "FieldDescriptor",
    "InverseRep",
    "field_new",
    "field_from_polynomial",
    "opc",
    "arith",
]
