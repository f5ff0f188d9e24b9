"""Dual curves of rationally parametrized plane curves.

Singular points of a projective curve ``F(x, y, z) = 0`` are located
exactly: on the chart ``z = 1`` the x-coordinates of singular points are
roots of ``gcd(Res_y(g, g_y), Res_y(g, g_x))``.  Each rational irreducible
factor ``h`` of that gcd is handled in the number field ``Q[a]/(h)``, where
the y-coordinate is the unique common root of ``g(a, y)``, ``g_x(a, y)``,
``g_y(a, y)``.  When two singular points share an x-coordinate the chart is
sheared (``x -> x + s*y``, ``s = 1, 2, ...``) and the search restarts.
Points on the line ``z = 0`` are found on the chart ``y = 1`` and at
``(1:0:0)``.  Every point found stands for its whole Galois orbit.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from chisini.algebra import upoly
from chisini.algebra.elimination import gcd, resultant, squarefree_part
from chisini.algebra.fields import QQ, EtaleAlgebra, gp_gcd, gp_normalize
from chisini.algebra.poly import MultiPoly, PolySyntaxError, parse
from chisini.germs import CurveGerm, invariants
from chisini.germs.puiseux import _rational_factors
from chisini.passport import (
    CurveNumerics,
    LocalDatum,
    Passport,
    Status,
    Verdict,
    curve_genus,
    pluecker_dual,
)


class DualError(ValueError):
    pass


# -- parametrized curves ------------------------------------------------------------

@dataclass(frozen=True)
class ParamCurve:
    """``t -> (x(t) : y(t) : z(t))`` with coordinates as dense rational
    polynomials (low degree first), common factors removed."""

    coords: tuple

    def __post_init__(self):
        cs = tuple(upoly.trim(c) for c in self.coords)
        if len(cs) != 3:
            raise DualError("a plane parametrization has three coordinates")
        if not any(cs):
            raise DualError("all coordinates vanish")
        common = ()
        for c in cs:
            common = upoly.gcd(common, c) if common else (upoly.monic(c) if c else ())
        if upoly.deg(common) > 0:
            cs = tuple(upoly.divmod_(c, common)[0] if c else () for c in cs)
        object.__setattr__(self, "coords", cs)

    @classmethod
    def parse(cls, text: str, var: str = "t") -> "ParamCurve":
        parts = [p.strip() for p in text.replace(",", ";").split(";")]
        if len(parts) != 3:
            raise DualError("expected three coordinates separated by ';'")
        try:
            polys = [parse(p, [var]) for p in parts]
        except PolySyntaxError as e:
            raise DualError(f"bad coordinate: {e}") from None
        return cls(tuple(p.to_univariate(var) if p else () for p in polys))

    @property
    def degree(self) -> int:
        return max(upoly.deg(c) for c in self.coords)

    def at(self, t0) -> tuple:
        return tuple(upoly.evaluate(c, Fraction(t0)) for c in self.coords)

    def is_point(self) -> bool:
        # all 2x2 minors of (P, P') vanish iff the image is a point
        dx, dy, dz = (upoly.derivative(c) for c in self.coords)
        return not any(_cross(self.coords, (dx, dy, dz)))

    def strings(self, var: str = "t") -> list[str]:
        return [upoly.fmt(c, var) for c in self.coords]


def _cross(p, q) -> tuple:
    x, y, z = p
    a, b, c = q
    return (
        upoly.sub(upoly.mul(y, c), upoly.mul(z, b)),
        upoly.sub(upoly.mul(z, a), upoly.mul(x, c)),
        upoly.sub(upoly.mul(x, b), upoly.mul(y, a)),
    )


def dual_param(c: ParamCurve) -> ParamCurve:
    """Tangent line at ``P(t)`` as the point ``P(t) x P'(t)`` of the dual plane."""
    deriv = tuple(upoly.derivative(x) for x in c.coords)
    cross = _cross(c.coords, deriv)
    if not any(cross):
        raise DualError("dual degenerates to a point")
    d = ParamCurve(cross)
    if d.degree == 0 or d.is_point():
        raise DualError("dual degenerates to a point")
    return d


def tangency_incidence(c: ParamCurve, t0) -> Fraction:
    """``<P(t0), l(t0)>``; zero when the dual point is the tangent line."""
    p = c.at(t0)
    line = dual_param(c).at(t0)
    return sum(a * b for a, b in zip(p, line))


# -- implicitization -------------------------------------------------------------------

def implicitize(c: ParamCurve, names=("x", "y", "z")) -> MultiPoly:
    """Homogeneous square-free equation of the image curve."""
    if c.is_point():
        raise DualError("image is a point")
    names = tuple(names)
    vs = names + ("t",)
    P = [MultiPoly.from_univariate(x, "t").with_variables(vs) if x else MultiPoly(vs) for x in c.coords]
    X = [MultiPoly.var(n, vs) for n in names]
    for k, i, j in ((2, 0, 1), (0, 1, 2), (1, 2, 0)):
        if not P[k]:
            continue
        a = X[k] * P[i] - X[i] * P[k]
        b = X[k] * P[j] - X[j] * P[k]
        if a.degree("t") < 1 and b.degree("t") < 1:
            continue
        r = resultant(a, b, "t").with_variables(names)
        if not r:
            continue
        # Res = const * X_k^a * F^e, with e = 1 for a proper parametrization
        a_min = min(e[k] for e, _ in r.items())
        F = MultiPoly(names, {e[:k] + (e[k] - a_min,) + e[k + 1:]: c for e, c in r.items()})
        if F.degree() != c.degree:
            F = squarefree_part(F)
        F = F.monic()
        if F.degree() != c.degree:
            raise DualError(f"implicit degree {F.degree()} differs from parametrization degree "
                            f"{c.degree}: parametrization is not proper")
        return F
    raise DualError("elimination collapsed: image is a point")


# -- singular points ---------------------------------------------------------------------

@dataclass(frozen=True)
class SingularPoint:
    """A Galois orbit of singular points; ``coords`` are in ``field``."""

    coords: tuple
    field: object
    orbit_size: int
    invariants: object

    def as_dict(self) -> dict:
        fmt = (lambda a: str(Fraction(a))) if self.field is QQ else self.field.fmt
        return {
            "point": [fmt(a) for a in self.coords],
            "field": "QQ" if self.field is QQ else repr(self.field),
            "orbitSize": self.orbit_size,
            "invariants": {k: v for k, v in self.invariants.as_dict().items() if k != "branches"},
        }


def _bivariate_at(G: MultiPoly, a, b, dom, xv: str, yv: str) -> dict:
    """Coefficients of ``G(x + a, y + b)`` as ``{(i, j): c}`` over ``dom``."""
    from chisini.germs import bivariate as bv

    p = bv.from_multipoly(G, dom, xv, yv)
    return bv.translate(p, dom(a), dom(b), dom)


def _univariate_over(G: MultiPoly, xv: str, yv: str, alpha, dom) -> list:
    """``G(alpha, y)`` as a dense coefficient list over ``dom``."""
    deg = max(G.degree(yv), 0)
    out = [dom.zero] * (deg + 1)
    xi = G.variables.index(xv)
    yi = G.variables.index(yv)
    for e, c in G.items():
        out[e[yi]] = out[e[yi]] + dom(c) * (alpha ** e[xi])
    return gp_normalize(out, dom)


def _field_for(factor: list):
    if len(factor) == 2:
        return QQ, -Fraction(factor[0]) / Fraction(factor[1])
    K = EtaleAlgebra(factor, "a")
    return K, K.gen


class _Reshear(Exception):
    pass


def _affine_singular(g: MultiPoly, xv: str, yv: str) -> list:
    """Singular points of ``g = 0`` with pairwise distinct x-coordinates
    (raises :class:`_Reshear` otherwise): ``[(field, x, y, size), ...]``."""
    gx, gy = g.derivative(xv), g.derivative(yv)
    if not gx and not gy:
        raise DualError("constant polynomial")
    if g.degree(yv) < 1:
        raise _Reshear()
    r1 = resultant(g, gy, yv) if gy else MultiPoly(g.variables)
    r2 = resultant(g, gx, yv) if gx else MultiPoly(g.variables)
    if not r1 or not r2:
        raise _Reshear()
    h = gcd(r1, r2)
    if h.is_constant():
        return []
    hu = h.with_variables((xv,)).to_univariate(xv) if h.used_variables() else ()
    out = []
    for fac in sorted(_rational_factors(list(hu)), key=lambda f: (len(f), f)):
        if fac in [o[4] for o in out]:
            continue
        K, alpha = _field_for(fac)
        polys = [_univariate_over(p, xv, yv, alpha, K) for p in (g, gx, gy)]
        common = polys[0]
        for p in polys[1:]:
            common = gp_gcd(common, p, K)
        d = len(common) - 1
        if d <= 0:
            continue
        if d >= 2:
            raise _Reshear()
        out.append((K, alpha, -common[0], len(fac) - 1, fac))
    return [o[:4] for o in out]


def singular_points(F: MultiPoly, max_shear: int = 32) -> list[SingularPoint]:
    """All singular points of the projective curve ``F = 0`` up to Galois
    conjugacy, with local invariants."""
    names = F.variables
    if len(names) != 3 or not F.is_homogeneous():
        raise DualError("expected a homogeneous polynomial in three variables")
    xn, yn, zn = names
    found: list[SingularPoint] = []
    # chart z = 1
    for s in range(max_shear):
        X = MultiPoly.var(xn, (xn, yn))
        Y = MultiPoly.var(yn, (xn, yn))
        g = F.subs({xn: X + s * Y if s else X, yn: Y, zn: 1}).with_variables((xn, yn))
        try:
            pts = _affine_singular(g, xn, yn)
        except _Reshear:
            continue
        for K, a, b, size in pts:
            germ = CurveGerm(_bivariate_at(g, a, b, K, xn, yn), xn, yn, domain=K, check=False)
            found.append(SingularPoint((a + s * b, b, K.one), K, size, invariants(germ)))
        break
    else:
        raise DualError("no admissible shear for the affine chart")
    # chart y = 1 on the line z = 0
    g2 = F.subs({yn: 1}).with_variables((xn, zn))
    on_line = [g2.subs({zn: 0}), g2.derivative(xn).subs({zn: 0}), g2.derivative(zn).subs({zn: 0})]
    common = ()
    zero_all = True
    for p in on_line:
        if p:
            zero_all = False
            u = p.with_variables((xn,)).to_univariate(xn)
            common = upoly.gcd(common, u) if common else upoly.monic(u)
    if zero_all:
        raise DualError("curve contains the line at infinity as a singular component")
    if upoly.deg(common) > 0:
        for fac in _rational_factors(list(common)):
            K, a = _field_for(fac)
            germ = CurveGerm(_bivariate_at(g2, a, 0, K, xn, zn), xn, zn, domain=K, check=False)
            found.append(SingularPoint((a, K.one, K.zero), K, len(fac) - 1, invariants(germ)))
    # the point (1:0:0)
    g3 = F.subs({xn: 1}).with_variables((yn, zn))
    if g3.constant_term() == 0 and g3.homogeneous_part(1).is_zero():
        germ = CurveGerm(g3, yn, zn)
        found.append(SingularPoint((Fraction(1), Fraction(0), Fraction(0)), QQ, 1, invariants(germ)))
    return found


@dataclass(frozen=True)
class SingularSummary:
    degree: int
    virtual_nodes: int
    virtual_cusps: int
    points: tuple

    @property
    def genus(self) -> int:
        return curve_genus(self.degree, self.virtual_nodes, self.virtual_cusps)

    @property
    def ordinary_only(self) -> bool:
        return all(str(p.invariants.type_tag) in ("A1", "A2") for p in self.points)

    def local_data(self) -> tuple:
        counts: dict = {}
        for p in self.points:
            tag = p.invariants.type_tag
            counts[tag] = counts.get(tag, 0) + p.orbit_size
        return tuple(LocalDatum(t, n, ()) for t, n in sorted(counts.items(), key=lambda kv: str(kv[0])))


def singular_summary(F: MultiPoly) -> SingularSummary:
    pts = singular_points(F)
    nv = sum(p.invariants.virtual_nodes * p.orbit_size for p in pts)
    cv = sum(p.invariants.virtual_cusps * p.orbit_size for p in pts)
    return SingularSummary(F.degree(), nv, cv, tuple(pts))


# -- dualizing covers --------------------------------------------------------------------

@dataclass(frozen=True)
class DualizingPassport:
    passport: Passport
    dual_curve_numerics: CurveNumerics
    source_numerics: CurveNumerics
    dual_parametrization: ParamCurve
    dual_equation: MultiPoly
    dual_singularities: SingularSummary

    def as_dict(self) -> dict:
        return {
            "passport": self.passport.as_dict(),
            "dualCurveNumerics": self.dual_curve_numerics.as_dict(),
            "sourceNumerics": self.source_numerics.as_dict(),
            "dualParametrization": self.dual_parametrization.strings(),
            "dualEquation": str(self.dual_equation),
            "dualSingularPoints": [p.as_dict() for p in self.dual_singularities.points],
            # finer local monodromy at bitangents and flexes is not tabulated
            "localMonodromy": "unpopulated",
        }


def dualizing_passport(c: ParamCurve) -> DualizingPassport:
    if c.degree < 2:
        raise DualError("image degree must be at least 2")
    src = singular_summary(implicitize(c))
    if src.genus != 0:
        raise DualError(f"source singularities give genus {src.genus}, expected 0 for a rational curve")
    # route (b): Plücker numerics from the source
    m, n_star, c_star = pluecker_dual(src.degree, src.virtual_nodes, src.virtual_cusps)
    # route (a): singular points of the implicit dual
    dp = dual_param(c)
    G = implicitize(dp, ("u", "v", "w"))
    dual = singular_summary(G)
    if (dual.degree, dual.virtual_nodes, dual.virtual_cusps) != (m, n_star, c_star):
        raise DualError(
            f"inconsistent dual numerics: scan gives {(dual.degree, dual.virtual_nodes, dual.virtual_cusps)}, "
            f"Pluecker gives {(m, n_star, c_star)}")
    numerics = CurveNumerics(m, 0, c_star, n_star, dual.ordinary_only)
    source = CurveNumerics(src.degree, 0, src.virtual_cusps, src.virtual_nodes, src.ordinary_only)
    passport = Passport(numerics, (2,), c.degree, dual.local_data(), dualizing_cover=True)
    return DualizingPassport(passport, numerics, source, dp, G, dual)


def thm8_verdict(dp) -> Verdict:
    """Accepts a :class:`DualizingPassport` or a plain dualizing
    :class:`Passport`; the genus is that of the dual curve (equal to the
    genus of the source)."""
    p = dp.passport if isinstance(dp, DualizingPassport) else dp
    n, g = p.cover_degree, p.curve.genus
    if (n >= 8 and g >= 1) or (n >= 12 and g == 0):
        return Verdict(Status.UNIQUE_BY_THM8, ({"rule": "Thm8", "coverDegree": n, "genus": g},))
    return Verdict(Status.INCONCLUSIVE, ())

