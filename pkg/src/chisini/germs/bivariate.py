"""Bivariate polynomials over a coefficient domain, as ``{(i, j): c}`` dicts.

``i`` is the exponent of ``z`` and ``j`` that of ``v``.  Only structurally
zero coefficients are dropped here; semantic zero tests go through the
domain (and may split an étale algebra).
"""
from __future__ import annotations

from math import comb

from chisini.algebra.poly import MultiPoly


def from_multipoly(f: MultiPoly, dom, zvar: str = "z", vvar: str = "v") -> dict:
    vs = f.variables
    extra = [v for v in f.used_variables() if v not in (zvar, vvar)]
    if extra:
        raise ValueError(f"germ equation uses variables {extra} besides {zvar}, {vvar}")
    zi = vs.index(zvar) if zvar in vs else None
    vi = vs.index(vvar) if vvar in vs else None
    out: dict = {}
    for e, c in f.items():
        key = (e[zi] if zi is not None else 0, e[vi] if vi is not None else 0)
        out[key] = out.get(key, dom.zero) + dom(c)
    return clean(out, dom)


def to_multipoly(p: dict, zvar: str = "z", vvar: str = "v") -> MultiPoly:
    return MultiPoly((zvar, vvar), p)


def clean(p: dict, dom) -> dict:
    return {k: c for k, c in p.items() if not dom.is_structural_zero(c)}


def add_term(acc: dict, key, c, dom) -> None:
    acc[key] = acc.get(key, dom.zero) + c


def derivative(p: dict, axis: int, dom) -> dict:
    out = {}
    for (i, j), c in p.items():
        e = (i, j)[axis]
        if e:
            key = (i - 1, j) if axis == 0 else (i, j - 1)
            out[key] = c * e
    return clean(out, dom)


def mul(p: dict, q: dict, dom) -> dict:
    out: dict = {}
    for (i1, j1), a in p.items():
        for (i2, j2), b in q.items():
            add_term(out, (i1 + i2, j1 + j2), a * b, dom)
    return clean(out, dom)


def shear(p: dict, s, dom) -> dict:
    """Return ``p(z + s*v, v)``."""
    if s == 0:
        return dict(p)
    out: dict = {}
    for (i, j), c in p.items():
        for k in range(i + 1):
            add_term(out, (k, j + i - k), c * (comb(i, k) * s ** (i - k)), dom)
    return clean(out, dom)


def swap(p: dict) -> dict:
    return {(j, i): c for (i, j), c in p.items()}


def scale_vars(p: dict, a, b, dom) -> dict:
    """Return ``p(a*z, b*v)``."""
    return clean({(i, j): c * (a ** i) * (b ** j) for (i, j), c in p.items()}, dom)


def translate(p: dict, z0, v0, dom) -> dict:
    """Return ``p(z + z0, v + v0)`` (``z0``, ``v0`` in the domain)."""
    out: dict = {}
    zp: dict = {}
    vp: dict = {}

    def power(cache, x, k):
        if k not in cache:
            cache[k] = dom.one if k == 0 else power(cache, x, k - 1) * x
        return cache[k]

    for (i, j), c in p.items():
        for a in range(i + 1):
            ca = c * comb(i, a) * power(zp, z0, i - a)
            if dom.is_structural_zero(ca):
                continue
            for b in range(j + 1):
                add_term(out, (a, b), ca * comb(j, b) * power(vp, v0, j - b), dom)
    return clean(out, dom)


def order(p: dict, dom) -> int:
    """Lowest total degree carrying a nonzero coefficient (``-1`` if zero)."""
    by_deg: dict = {}
    for (i, j), c in p.items():
        by_deg.setdefault(i + j, []).append(c)
    for d in sorted(by_deg):
        if any(not dom.is_zero(c) for c in by_deg[d]):
            return d
    return -1


def homogeneous_part(p: dict, d: int) -> dict:
    return {k: c for k, c in p.items() if k[0] + k[1] == d}


def evaluate_at_origin(p: dict, dom):
    return p.get((0, 0), dom.zero)
