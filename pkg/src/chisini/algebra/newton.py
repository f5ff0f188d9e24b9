"""Newton polygons of bivariate polynomials."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from chisini.algebra.poly import MultiPoly


def lower_hull(points: Iterable[tuple[int, int]]) -> tuple:
    """Vertices of the compact lower-left boundary of ``conv(points) + R^2_+``.

    Ordered from the point of least first coordinate to the point of least
    second coordinate; consecutive slopes strictly increase.
    """
    pts = set(points)
    if not pts:
        return ()
    imin = min(i for i, _ in pts)
    start = (imin, min(j for i, j in pts if i == imin))
    jmin = min(j for _, j in pts)
    hull = [start]
    cur = start
    while cur[1] > jmin:
        best = None
        best_slope = None
        for p in pts:
            if p[1] < cur[1] and p[0] > cur[0]:
                s = Fraction(p[1] - cur[1], p[0] - cur[0])
                if best is None or s < best_slope or (s == best_slope and p[0] > best[0]):
                    best, best_slope = p, s
        if best is None:
            break
        hull.append(best)
        cur = best
    return tuple(hull)


@dataclass(frozen=True)
class NewtonPolygon:
    points: frozenset
    vertices: tuple

    @property
    def edges(self) -> tuple:
        return tuple(zip(self.vertices, self.vertices[1:]))

    @property
    def slopes(self) -> tuple:
        return tuple(Fraction(b[1] - a[1], b[0] - a[0]) for a, b in self.edges)


def newton_polygon(f: MultiPoly) -> NewtonPolygon:
    """Support and lower hull of a nonzero bivariate polynomial.

    Lattice points are ``(i, j)`` with ``i`` the exponent of the first
    variable and ``j`` that of the second.
    """
    if not f:
        raise ValueError("Newton polygon of the zero polynomial")
    if len(f.variables) != 2:
        raise ValueError("Newton polygon needs exactly two variables")
    pts = frozenset((e[0], e[1]) for e, _ in f.items())
    return NewtonPolygon(pts, lower_hull(pts))
