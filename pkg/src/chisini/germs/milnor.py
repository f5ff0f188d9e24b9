"""Milnor numbers of plane curve germs at the origin.

Two independent routes:

``local_algebra_milnor``
    dimension of ``K[[z, v]] / (f_z, f_v)`` computed as the stable value of
    ``dim K[z, v] / (f_z, f_v) + m^D``.  When two consecutive truncation
    orders give the same dimension, Nakayama's lemma shows ``m^D`` already
    lies in the ideal, so the value is exact.

``resultant_milnor``
    order at ``z = 0`` of ``Res_v(f_z, f_v)`` after a shear that makes the
    partials monic in ``v`` and leaves the origin as their only common zero
    on the line ``z = 0``.  Rational coefficients only; used as a check.
"""
from __future__ import annotations

from chisini.algebra import upoly
from chisini.algebra.elimination import resultant
from chisini.algebra.fields import QQ
from chisini.algebra.poly import MultiPoly
from chisini.germs import bivariate as bv


class NonIsolatedSingularity(ValueError):
    pass


def _truncated_rank(gens: list, D: int, dom) -> int:
    """Rank of ``{m * h mod m^D}`` over monomials ``m`` and generators ``h``."""
    pivots: dict = {}  # column -> normalized row (dict)
    rank = 0
    for h in gens:
        for a in range(D):
            for b in range(D - a):
                row = {}
                for (i, j), c in h.items():
                    if i + a + j + b < D:
                        row[(i + a, j + b)] = c
                if not row:
                    continue
                # reduce against existing pivots
                while row:
                    col = min(row, key=lambda t: (t[0] + t[1], t))
                    c = row[col]
                    if dom.is_zero(c):
                        del row[col]
                        continue
                    if col in pivots:
                        prow = pivots[col]
                        for k, pc in prow.items():
                            nv = row.get(k, dom.zero) - c * pc
                            if dom.is_structural_zero(nv):
                                row.pop(k, None)
                            else:
                                row[k] = nv
                        continue
                    inv = dom.inv(c)
                    pivots[col] = {k: x * inv for k, x in row.items()}
                    rank += 1
                    break
    return rank


def local_algebra_milnor(p: dict, dom=QQ, max_order: int | None = None) -> int:
    """Milnor number via the local-algebra staircase computation."""
    fz = bv.derivative(p, 0, dom)
    fv = bv.derivative(p, 1, dom)
    if max_order is None:
        d = max((i + j for i, j in p), default=1)
        max_order = (d - 1) ** 2 + 3
    prev = None
    for D in range(1, max_order + 1):
        n_monos = D * (D + 1) // 2
        dim = n_monos - _truncated_rank([fz, fv], D, dom)
        if prev is not None and dim == prev:
            return dim
        prev = dim
    raise NonIsolatedSingularity("non-isolated singularity at the origin")


def resultant_milnor(f: MultiPoly, zvar: str = "z", vvar: str = "v", max_shear: int = 64) -> int:
    """Milnor number as an intersection multiplicity read off a resultant."""
    f = f.with_variables((zvar, vvar))
    z = MultiPoly.var(zvar, (zvar, vvar))
    v = MultiPoly.var(vvar, (zvar, vvar))
    for s in range(max_shear):
        g = f.subs({zvar: z + s * v}).with_variables((zvar, vvar)) if s else f
        gz, gv = g.derivative(zvar), g.derivative(vvar)
        if not gz or not gv:
            if g.order() <= 1 and not g.homogeneous_part(1).is_zero():
                return 0
            continue
        # one partial monic in v (up to a constant): no roots escape to infinity
        if not any(h.degree(vvar) > 0 and h.coeffs_in(vvar)[h.degree(vvar)].is_constant()
                   for h in (gz, gv)):
            continue
        # origin must be the only common zero on z = 0
        a = gz.subs({zvar: 0}).to_univariate(vvar) if gz.subs({zvar: 0}) else ()
        b = gv.subs({zvar: 0}).to_univariate(vvar) if gv.subs({zvar: 0}) else ()
        common = upoly.gcd(a, b)
        if len(common) > 1 and any(c != 0 for c in common[:-1]):
            continue
        r = resultant(gz, gv, vvar)
        if not r:
            raise NonIsolatedSingularity("partials share a component")
        coeffs = r.to_univariate(zvar)
        return next(i for i, c in enumerate(coeffs) if c != 0)
    raise RuntimeError("no admissible shear found")


def gradient_vanishes(p: dict, dom) -> bool:
    return (dom.is_zero(p.get((1, 0), dom.zero)) and dom.is_zero(p.get((0, 1), dom.zero)))


def has_isolated_singularity(f: MultiPoly, zvar: str = "z", vvar: str = "v") -> bool:
    """True unless ``f_z`` and ``f_v`` share a factor through the origin."""
    from chisini.algebra.elimination import gcd

    g = gcd(f.derivative(zvar), f.derivative(vvar))
    if g.is_constant():
        return True
    return g.constant_term() != 0

