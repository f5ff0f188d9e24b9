"""Coefficient domains for exact local computations.

Two domains are provided:

* :data:`QQ`, the rational numbers (elements are ``Fraction``);
* :class:`EtaleAlgebra`, ``Q[b]/(M(b))`` for a square-free monic ``M``.

An étale algebra is a finite product of number fields that we never factor
up front.  Zero tests follow the dynamic-evaluation discipline: asking
whether an element is zero either answers uniformly on every factor or
raises :class:`Split` carrying a coprime factorization of the modulus, and
the caller restarts on each piece.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from chisini.algebra import upoly


class Split(Exception):
    """An étale algebra turned out to need splitting."""

    def __init__(self, algebra: "EtaleAlgebra", factors: tuple):
        super().__init__(f"split of {algebra} into {len(factors)} factors")
        self.algebra = algebra
        self.factors = factors


class RationalField:
    dim = 1
    name = "QQ"

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def is_zero(self, a) -> bool:
        return a == 0

    def inv(self, a) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def is_structural_zero(self, a) -> bool:
        return a == 0

    def fmt(self, a) -> str:
        return str(a)

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


class AlgElem:
    __slots__ = ("alg", "c")

    def __init__(self, alg: "EtaleAlgebra", coeffs):
        self.alg = alg
        self.c = coeffs  # reduced UPoly

    def _lift(self, other):
        if isinstance(other, AlgElem):
            if other.alg is not self.alg:
                raise TypeError("elements of different algebras")
            return other.c
        if isinstance(other, (int, Fraction)):
            return upoly.trim((other,))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.alg, upoly.add(self.c, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.alg, upoly.sub(self.c, o))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.alg, upoly.sub(o, self.c))

    def __neg__(self):
        return AlgElem(self.alg, tuple(-x for x in self.c))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgElem(self.alg, upoly.scale(self.c, other))
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.alg, upoly.rem(upoly.mul(self.c, o), self.alg.modulus))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = self.alg.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * self.alg.inv(other)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.c == o

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return self.alg.fmt(self)


class EtaleAlgebra:
    """``Q[b]/(modulus)`` with ``modulus`` square-free and monic."""

    def __init__(self, modulus: Sequence, name: str = "b"):
        m = upoly.monic(upoly.trim(modulus))
        if upoly.deg(m) < 1:
            raise ValueError("modulus must have positive degree")
        if not upoly.is_squarefree(m):
            raise ValueError("modulus must be square-free")
        self.modulus = m
        self.name = name

    @property
    def dim(self) -> int:
        return upoly.deg(self.modulus)

    def __call__(self, x) -> AlgElem:
        if isinstance(x, AlgElem):
            if x.alg is not self:
                raise TypeError("element of another algebra")
            return x
        return AlgElem(self, upoly.trim((x,)))

    def element(self, coeffs) -> AlgElem:
        return AlgElem(self, upoly.rem(upoly.trim(coeffs), self.modulus))

    @property
    def zero(self) -> AlgElem:
        return AlgElem(self, ())

    @property
    def one(self) -> AlgElem:
        return AlgElem(self, (Fraction(1),))

    @property
    def gen(self) -> AlgElem:
        return self.element((0, 1))

    def is_structural_zero(self, a) -> bool:
        return not self(a).c

    def is_zero(self, a) -> bool:
        a = self(a)
        if not a.c:
            return True
        g = upoly.gcd(a.c, self.modulus)
        if upoly.deg(g) == 0:
            return False
        raise Split(self, (g, upoly.divmod_(self.modulus, g)[0]))

    def inv(self, a) -> AlgElem:
        a = self(a)
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = upoly.xgcd(a.c, self.modulus)
        return AlgElem(self, upoly.rem(s, self.modulus))

    def restrict(self, factor: Sequence) -> tuple["EtaleAlgebra", callable]:
        """Quotient by a factor of the modulus, with the projection map."""
        sub = EtaleAlgebra(factor, self.name)

        def project(x):
            if isinstance(x, AlgElem):
                return sub.element(x.c)
            return sub(x)

        return sub, project

    def fmt(self, a) -> str:
        return upoly.fmt(a.c, self.name)

    def __repr__(self) -> str:
        return f"Q[{self.name}]/({upoly.fmt(self.modulus, self.name)})"


# -- univariate polynomials over a domain ---------------------------------
# Dense lists, low degree first; normalization uses the domain's zero test.

def gp_normalize(p: list, dom) -> list:
    p = list(p)
    while p and dom.is_zero(p[-1]):
        p.pop()
    return p


def gp_monic(p: list, dom) -> list:
    p = gp_normalize(p, dom)
    if not p:
        return p
    inv = dom.inv(p[-1])
    return [c * inv for c in p[:-1]] + [dom.one]


def gp_divmod(p: list, q: list, dom) -> tuple[list, list]:
    q = gp_normalize(q, dom)
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    p = gp_normalize(p, dom)
    inv = dom.inv(q[-1])
    dq = len(q) - 1
    r = list(p)
    if len(r) <= dq:
        return [], r
    quo = [dom.zero] * (len(r) - dq)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k] * inv
        quo[k - dq] = c
        for j in range(dq + 1):
            r[k - dq + j] = r[k - dq + j] - c * q[j]
    return quo, gp_normalize(r[:dq], dom)


def gp_gcd(p: list, q: list, dom) -> list:
    p, q = gp_normalize(p, dom), gp_normalize(q, dom)
    while q:
        p, q = q, gp_divmod(p, q, dom)[1]
    return gp_monic(p, dom)


def gp_derivative(p: list, dom) -> list:
    return [p[i] * i for i in range(1, len(p))]


def gp_mul(p: list, q: list, dom) -> list:
    if not p or not q:
        return []
    out = [dom.zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def gp_squarefree_decomposition(p: list, dom) -> list:
    """Yun's algorithm: ``[(factor, multiplicity), ...]`` with monic factors."""
    p = gp_monic(p, dom)
    if len(p) <= 1:
        return []
    out = []
    dp = gp_derivative(p, dom)
    a = gp_gcd(p, dp, dom)
    b = gp_divmod(p, a, dom)[0]
    c = gp_divmod(dp, a, dom)[0]
    d = [x - y for x, y in _pad(c, gp_derivative(b, dom), dom)]
    i = 1
    while len(gp_normalize(b, dom)) > 1:
        a = gp_gcd(b, d, dom)
        b = gp_divmod(b, a, dom)[0]
        c = gp_divmod(d, a, dom)[0]
        if len(a) > 1:
            out.append((a, i))
        d = [x - y for x, y in _pad(c, gp_derivative(b, dom), dom)]
        i += 1
    return out


def _pad(p: list, q: list, dom):
    n = max(len(p), len(q))
    p = list(p) + [dom.zero] * (n - len(p))
    q = list(q) + [dom.zero] * (n - len(q))
    return zip(p, q)


def gp_eval(p: list, x, dom):
    acc = dom.zero
    for c in reversed(p):
        acc = acc * x + c
    return acc


# -- extensions -------------------------------------------------------------

def _solve_rational(rows: list, target: list) -> list | None:
    """Solve ``sum_i x_i rows[i] == target`` over Q; ``None`` if singular."""
    n = len(rows)
    # columns = coordinates; build augmented matrix A^T x = target
    m = [[Fraction(rows[i][r]) for i in range(n)] + [Fraction(target[r])] for r in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def extend(dom, psi: list, name: str = "b"):
    """Adjoin a root of the monic square-free ``psi`` (coefficients in ``dom``).

    Returns ``(new_algebra, embed, root)`` where ``embed`` maps elements of
    ``dom`` into the new algebra and ``root`` is the class of the adjoined
    variable.  A primitive element ``Z + k*a`` is searched for ``k = 0, 1,
    2, ...``; linear algebra over Q checks that it generates.
    """
    psi = gp_monic(psi, dom)
    d = len(psi) - 1
    if d < 1:
        raise ValueError("cannot adjoin a root of a constant")
    if d == 1:
        return dom, (lambda x: dom(x)), -psi[0]
    if dom is QQ:
        new = EtaleAlgebra([Fraction(c) for c in psi], name)
        return new, (lambda x: new(x)), new.gen
    base_dim = dom.dim
    total = base_dim * d

    def coords(elem_list):
        # element of dom[Z]/psi as list of d dom-elements -> Q-coordinates
        out = []
        for j in range(d):
            e = elem_list[j] if j < len(elem_list) else dom.zero
            c = list(dom(e).c) + [Fraction(0)] * (base_dim - len(dom(e).c))
            out.extend(c)
        return out

    def mulmod(a, b):
        prod = gp_mul(a, b, dom)
        # reduce modulo monic psi without zero tests
        prod = list(prod)
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            if dom.is_structural_zero(c):
                continue
            for j in range(d + 1):
                prod[k - d + j] = prod[k - d + j] - c * psi[j]
        return prod[:d]

    alpha = [dom.gen] + [dom.zero] * (d - 1)
    zvar = [dom.zero] * d
    zvar[1] = dom.one
    for k in range(0, 64):
        beta = [zvar[j] + (alpha[j] * k if k else dom.zero) for j in range(d)]
        powers = [[dom.one] + [dom.zero] * (d - 1)]
        for _ in range(total):
            powers.append(mulmod(powers[-1], beta))
        rows = [coords(p) for p in powers[:total]]
        sol_top = _solve_rational(rows, coords(powers[total]))
        if sol_top is None:
            continue
        modulus = [-x for x in sol_top] + [Fraction(1)]
        new = EtaleAlgebra(modulus, name)
        a_coords = _solve_rational(rows, coords(alpha))
        z_coords = _solve_rational(rows, coords(zvar))
        a_img = new.element(a_coords)
        z_img = new.element(z_coords)

        def embed(x, _a=a_img, _new=new):
            x = dom(x)
            acc = _new.zero
            for c in reversed(x.c):
                acc = acc * _a + c
            return acc

        return new, embed, z_img
    raise RuntimeError("no primitive element found")
