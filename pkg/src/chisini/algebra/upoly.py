"""Dense univariate polynomials over the rationals.

A polynomial is a tuple of :class:`~fractions.Fraction` coefficients in
increasing degree order with no trailing zeros; the zero polynomial is ``()``.
These helpers back the resultant fast path and the étale algebras used by
the Puiseux code.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

UPoly = tuple  # tuple[Fraction, ...], low degree first


def trim(coeffs: Iterable) -> UPoly:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def deg(p: Sequence) -> int:
    return len(p) - 1


def add(p: UPoly, q: UPoly) -> UPoly:
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def sub(p: UPoly, q: UPoly) -> UPoly:
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n))


def scale(p: UPoly, c) -> UPoly:
    c = Fraction(c)
    if c == 0:
        return ()
    return tuple(c * x for x in p)


def mul(p: UPoly, q: UPoly) -> UPoly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def divmod_(p: UPoly, q: UPoly) -> tuple[UPoly, UPoly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    lc = q[-1]
    if len(r) <= dq:
        return (), trim(r)
    quo = [Fraction(0)] * (len(r) - dq)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k] / lc
        if c:
            quo[k - dq] = c
            for j in range(dq + 1):
                r[k - dq + j] -= c * q[j]
    return trim(quo), trim(r[:dq])


def rem(p: UPoly, q: UPoly) -> UPoly:
    return divmod_(p, q)[1]


def monic(p: UPoly) -> UPoly:
    if not p:
        return p
    return scale(p, 1 / p[-1])


def gcd(p: UPoly, q: UPoly) -> UPoly:
    """Monic gcd; ``gcd(0, 0) == 0``."""
    while q:
        p, q = q, rem(p, q)
    return monic(p)


def xgcd(p: UPoly, q: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """Return ``(g, s, t)`` with ``s*p + t*q == g`` and ``g`` monic."""
    r0, r1 = p, q
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        quo, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return (), (), ()
    inv = 1 / r0[-1]
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def derivative(p: UPoly) -> UPoly:
    return trim(i * p[i] for i in range(1, len(p)))


def evaluate(p: UPoly, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def resultant(p: UPoly, q: UPoly) -> Fraction:
    """Sylvester resultant of two univariate polynomials (Euclidean scheme)."""
    if not p or not q:
        return Fraction(0)
    sign = 1
    acc = Fraction(1)
    while True:
        m, n = deg(p), deg(q)
        if n == 0:
            return sign * acc * q[0] ** m
        if m < n:
            p, q = q, p
            if m * n % 2:
                sign = -sign
            continue
        # res(p, q) = (-1)^(mn) res(q, p) = (-1)^(mn) lc(q)^(m - k) res(q, p mod q)
        r = rem(p, q)
        if not r:
            return Fraction(0)
        k = deg(r)
        if m * n % 2:
            sign = -sign
        acc *= q[-1] ** (m - k)
        p, q = q, r


def squarefree(p: UPoly) -> UPoly:
    if len(p) <= 1:
        return monic(p)
    g = gcd(p, derivative(p))
    return monic(divmod_(p, g)[0])


def is_squarefree(p: UPoly) -> bool:
    return deg(gcd(p, derivative(p))) <= 0


def fmt(p: UPoly, var: str = "x") -> str:
    """Readable form, highest degree first (same conventions as MultiPoly)."""
    from chisini.algebra.poly import MultiPoly

    return str(MultiPoly.from_univariate(p, var))
