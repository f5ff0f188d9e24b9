"""Rational Newton–Puiseux expansion (Duval's transformations).

For an edge of slope ``q/p`` and a root ``xi`` of its characteristic
polynomial, the substitution

    z = xi^b * x^p,    v = x^q * (xi^a + y),    p*a - q*b = 1

keeps every coefficient in the field generated by ``xi``, so the ``p``
conjugate series attached to one root are never separated and a single
expansion stands for a whole conjugacy class of branches.  Roots are never
computed numerically: they live in étale algebras (see
:mod:`chisini.algebra.fields`) and a branch class over an algebra of
dimension ``D`` over the base field stands for ``D`` geometric branches.

Expansions stop as soon as the remaining root is simple; the data kept per
class is what the singularity invariants need: ramification index,
characteristic exponents, and the extension tower.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from chisini.algebra import upoly
from chisini.algebra.fields import (
    QQ,
    Split,
    extend,
    gp_monic,
    gp_squarefree_decomposition,
)
from chisini.algebra.newton import lower_hull


@dataclass(frozen=True)
class PuiseuxBranch:
    """One class of conjugate branches of a germ.

    The germ is taken in coordinates where the line ``z = 0`` is transversal
    to every branch, so each branch is parametrized ``z = t^e`` and its
    multiplicity equals ``e``.
    """

    ramification_index: int
    characteristic_exponents: tuple
    tower: tuple
    conjugacy_class_size: int

    @property
    def multiplicity(self) -> int:
        return self.ramification_index

    def as_dict(self) -> dict:
        return {
            "ramificationIndex": self.ramification_index,
            "characteristicExponents": [str(e) for e in self.characteristic_exponents],
            "tower": list(self.tower),
            "conjugacyClassSize": self.conjugacy_class_size,
        }


@dataclass(frozen=True)
class _Leaf:
    ram: int
    chars: tuple
    tower: tuple
    dim: int  # Q-dimension of the algebra carrying the class


def _bezout(p: int, q: int) -> tuple[int, int]:
    """Nonnegative ``a, b`` with ``p*a - q*b == 1`` (``gcd(p, q) == 1``)."""
    if q == 1:
        return 1, p - 1
    a = pow(p, -1, q)
    return a, (p * a - 1) // q


def _fmt_poly(coeffs: list, dom, var: str) -> str:
    if dom is QQ:
        return upoly.fmt(upoly.trim(coeffs), var)
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = dom(coeffs[k])
        if dom.is_structural_zero(c):
            continue
        cs = dom.fmt(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            terms.append(f"({cs})")
        elif cs == "1":
            terms.append(mono)
        else:
            terms.append(f"({cs})*{mono}")
    return " + ".join(terms) or "0"


def _rational_factors(psi: list) -> list:
    """Split a rational polynomial into irreducible monic factors."""
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(psi)], x, domain="QQ")
    _, factors = poly.factor_list()
    out = []
    for fac, mult in factors:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs())]
        lc = coeffs[-1]
        monic = [c / lc for c in coeffs]
        out.extend([monic] * mult)
    return out


class _Expander:
    def __init__(self, base_dim: int):
        self.base_dim = base_dim
        self.counter = 0

    def fresh_name(self) -> str:
        self.counter += 1
        return f"b{self.counter}"

    def run(self, g: dict, dom, ram: int, offset: Fraction, chars: tuple,
            tower: tuple, top: bool) -> list:
        pending = [(g, dom)]
        results = []
        while pending:
            g, dom = pending.pop()
            try:
                results.extend(self._once(g, dom, ram, offset, chars, tower, top))
            except Split as s:
                if s.algebra is not dom:
                    raise
                for factor in s.factors:
                    sub, proj = dom.restrict(factor)
                    pending.append(({k: proj(c) for k, c in g.items()}, sub))
        return results

    def _once(self, g, dom, ram, offset, chars, tower, top) -> list:
        out = []
        k = self._order_in_y(g, dom)
        if k <= 0:
            return out
        if not top and k == 1:
            return [_Leaf(ram, chars, tower, dom.dim)]
        # exact root y = 0
        while k > 0 and all(dom.is_zero(c) for (i, j), c in g.items() if j == 0):
            out.append(_Leaf(ram, chars, tower, dom.dim))
            g = {(i, j - 1): c for (i, j), c in g.items() if j > 0}
            k -= 1
            if k == 0:
                return out
            if not top and k == 1:
                out.append(_Leaf(ram, chars, tower, dom.dim))
                return out
        support = [(i, j) for (i, j), c in g.items() if j <= k and not dom.is_zero(c)]
        hull = lower_hull(support)
        for (i1, j1), (i2, j2) in zip(hull, hull[1:]):
            dx, dy = i2 - i1, j1 - j2
            h = gcd(dx, dy)
            q, p = dx // h, dy // h
            phi = [g.get((i2 - q * s, j2 + p * s), dom.zero) for s in range(h + 1)]
            phi = gp_monic(phi, dom)
            exponent = offset + Fraction(q, ram * p)
            new_chars = chars + ((exponent,) if p > 1 else ())
            for psi, mult in self._factor(phi, dom):
                d = len(psi) - 1
                psi_str = _fmt_poly(psi, dom, "Z")
                if mult == 1:
                    out.append(_Leaf(ram * p, new_chars, tower + (psi_str,), dom.dim * d))
                    continue
                name = self.fresh_name()
                new_dom, embed, xi = extend(dom, psi, name)
                g2 = self._transform(g, dom, new_dom, embed, xi, p, q)
                out.extend(self.run(g2, new_dom, ram * p, exponent, new_chars,
                                    tower + (psi_str,), top=False))
        return out

    @staticmethod
    def _order_in_y(g, dom) -> int:
        col = sorted(((j, c) for (i, j), c in g.items() if i == 0), key=lambda t: t[0])
        for j, c in col:
            if not dom.is_zero(c):
                return j
        return -1

    @staticmethod
    def _factor(phi, dom) -> list:
        parts = gp_squarefree_decomposition(phi, dom)
        if dom is not QQ:
            return parts
        out = []
        for psi, mult in parts:
            for fac in _rational_factors(psi):
                out.append((fac, mult))
        return out

    @staticmethod
    def _transform(g, dom, new_dom, embed, xi, p, q) -> dict:
        a, b = _bezout(p, q)
        xa = xi ** a
        xb = xi ** b
        n_min = None
        out: dict = {}
        for (i, j), c in g.items():
            if dom.is_structural_zero(c):
                continue
            c2 = embed(c) * (xb ** i)
            shift = p * i + q * j
            n_min = shift if n_min is None else min(n_min, shift)
            for t in range(j + 1):
                term = c2 * comb(j, t) * (xa ** (j - t))
                key = (shift, t)
                out[key] = out.get(key, new_dom.zero) + term
        result = {k: c for k, c in out.items() if not new_dom.is_structural_zero(c)}
        # every term has weight >= n_min, attained on the edge
        return {(sh - n_min, t): c for (sh, t), c in result.items()}


def expand_branches(g: dict, dom) -> list[PuiseuxBranch]:
    """Branch classes of the germ ``g`` at the origin over ``dom``.

    ``g`` must be square-free and transversal to ``z = 0``.  Counts in the
    result are numbers of geometric branches per point of the base.
    """
    exp = _Expander(dom.dim)
    leaves = exp.run(g, dom, 1, Fraction(0), (), (), top=True)
    out = []
    for leaf in leaves:
        if leaf.dim % dom.dim:
            raise ArithmeticError("branch class dimension not a multiple of the base")
        out.append(PuiseuxBranch(leaf.ram, leaf.chars, leaf.tower, leaf.dim // dom.dim))
    out.sort(key=lambda b: (b.ramification_index, b.characteristic_exponents,
                            b.conjugacy_class_size, b.tower))
    return out
