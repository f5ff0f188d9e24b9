"""Resultants, discriminants, gcds and square-free parts of MultiPoly."""
from __future__ import annotations

from fractions import Fraction

from chisini.algebra import upoly
from chisini.algebra.poly import MultiPoly


def _sylvester(fc: list, gc: list, zero) -> list:
    """Sylvester matrix from coefficient lists (highest degree first)."""
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def bareiss_det(matrix: list, one, zero):
    """Fraction-free determinant; entries need ``*``, ``-`` and ``divexact``."""
    a = [row[:] for row in matrix]
    n = len(a)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = a[i][j] * pivot - aik * a[k][j]
                a[i][j] = num if prev == one else num.divexact(prev)
            a[i][k] = zero
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Sylvester resultant of ``f`` and ``g`` with respect to ``var``.

    The result is free of ``var`` and lives on the union of the input
    variables minus ``var``.
    """
    f, g = f._coerce(g)
    variables = f.variables
    rest = tuple(v for v in variables if v != var)
    df, dg = f.degree(var), g.degree(var)
    if df <= 0 and dg <= 0:
        raise ValueError("no eliminable variable")
    if df < 0 or dg < 0:
        return MultiPoly(rest)
    if df == 0:
        return (f ** dg).with_variables(rest)
    if dg == 0:
        return (g ** df).with_variables(rest)
    if f.is_univariate_in(var) and g.is_univariate_in(var):
        r = upoly.resultant(f.to_univariate(var), g.to_univariate(var))
        return MultiPoly.constant(r, rest)
    fcs, gcs = f.coeffs_in(var), g.coeffs_in(var)
    zero = MultiPoly(rest)
    fc = [fcs.get(k, zero) for k in range(df, -1, -1)]
    gc = [gcs.get(k, zero) for k in range(dg, -1, -1)]
    one = MultiPoly.constant(1, rest)
    return bareiss_det(_sylvester(fc, gc, zero), one, zero)


def discriminant(f: MultiPoly, var: str) -> MultiPoly:
    """``(-1)^(d(d-1)/2) * Res(f, f') / lc(f)`` with respect to ``var``."""
    d = f.degree(var)
    if d < 2:
        raise ValueError("degree too small")
    lc = f.coeffs_in(var)[d]
    r = resultant(f, f.derivative(var), var)
    r = r.divexact(lc.with_variables(r.variables)) if not lc.is_constant() else r / lc.constant_value()
    return -r if (d * (d - 1) // 2) % 2 else r


# -- gcd -------------------------------------------------------------------

def _univariate_gcd(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    h = upoly.gcd(f.to_univariate(var), g.to_univariate(var))
    return MultiPoly.from_univariate(h, var).with_variables(f.variables)


def _content(f: MultiPoly, var: str) -> MultiPoly:
    """gcd of the coefficients of ``f`` viewed in ``var`` (monic)."""
    rest = tuple(v for v in f.variables if v != var)
    acc = MultiPoly(rest)
    for c in f.coeffs_in(var).values():
        acc = gcd(acc, c)
        if acc.is_constant() and acc:
            break
    return acc.with_variables(f.variables)


def _prem(a: MultiPoly, b: MultiPoly, var: str) -> MultiPoly:
    """Pseudo-remainder of ``a`` by ``b`` in ``var``."""
    db = b.degree(var)
    lb = b.coeffs_in(var)[db].with_variables(a.variables)
    x = MultiPoly.var(var, a.variables)
    r = a
    e = a.degree(var) - db + 1
    while r and r.degree(var) >= db:
        dr = r.degree(var)
        lr = r.coeffs_in(var)[dr].with_variables(a.variables)
        r = r * lb - lr * b * x ** (dr - db)
        e -= 1
    return r * lb ** max(e, 0)


def gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Monic greatest common divisor over the rationals.

    Recursive primitive polynomial remainder sequence; the univariate case
    uses Euclid directly.
    """
    f, g = f._coerce(g)
    if not f:
        return g.monic()
    if not g:
        return f.monic()
    if f.is_constant() or g.is_constant():
        return MultiPoly.constant(1, f.variables)
    used = [v for v in f.variables if v in f.used_variables() or v in g.used_variables()]
    var = used[0]
    if len(used) == 1:
        return _univariate_gcd(f, g, var)
    cf, cg = _content(f, var), _content(g, var)
    c = gcd(cf, cg)
    pf, pg = f.divexact(cf), g.divexact(cg)
    if pf.free_of(var) or pg.free_of(var):
        return c.monic()
    a, b = (pf, pg) if pf.degree(var) >= pg.degree(var) else (pg, pf)
    while b and not b.free_of(var):
        r = _prem(a, b, var)
        if not r:
            a = b
            break
        a, b = b, r.divexact(_content(r, var))
    else:
        # remainder sequence reached a nonzero constant in var: coprime
        return c.monic()
    h = a.divexact(_content(a, var))
    return (c * h).monic()


def squarefree_part(f: MultiPoly) -> MultiPoly:
    """Product of the distinct irreducible factors of ``f``, monic."""
    if not f:
        raise ValueError("square-free part of the zero polynomial")
    if f.is_constant():
        return MultiPoly.constant(1, f.variables)
    g = f
    for v in f.used_variables():
        g = gcd(g, f.derivative(v))
        if g.is_constant():
            break
    return f.divexact(g).monic()


def is_squarefree(f: MultiPoly) -> bool:
    return squarefree_part(f) == f.monic()


def same_zero_set(f: MultiPoly, g: MultiPoly) -> bool:
    """Compare square-free monic canonical forms."""
    return squarefree_part(f) == squarefree_part(g)


def rational_content(f: MultiPoly) -> Fraction:
    """Positive rational ``c`` such that ``f / c`` has coprime integer coefficients."""
    from math import gcd as igcd, lcm

    if not f:
        return Fraction(0)
    den = 1
    for _, c in f.items():
        den = lcm(den, c.denominator)
    num = 0
    for _, c in f.items():
        num = igcd(num, int(c * den))
    return Fraction(num, den)
