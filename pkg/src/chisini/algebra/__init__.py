"""Exact polynomial algebra over the rationals."""
from chisini.algebra.elimination import (
    discriminant,
    gcd,
    is_squarefree,
    resultant,
    same_zero_set,
    squarefree_part,
)
from chisini.algebra.newton import NewtonPolygon, newton_polygon
from chisini.algebra.poly import MultiPoly, PolySyntaxError, parse

__all__ = [
    "MultiPoly",
    "NewtonPolygon",
    "PolySyntaxError",
    "discriminant",
    "gcd",
    "is_squarefree",
    "newton_polygon",
    "parse",
    "resultant",
    "same_zero_set",
    "squarefree_part",
]
