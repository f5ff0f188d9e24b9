"""Independent reference computations built on sympy.

None of these share code with the package; they are slow and only meant
for small inputs.
"""
from __future__ import annotations

from itertools import permutations, product

import sympy
from sympy.combinatorics import Permutation as SPerm

z, v, w, t = sympy.symbols("z v w t")


def sym(poly, names=None):
    """MultiPoly -> sympy expression (through its printed form)."""
    text = str(poly).replace("^", "**")
    return sympy.sympify(text, locals={n: sympy.Symbol(n) for n in (names or poly.variables)})


def local_algebra_dim(expr, x=z, y=v, max_order=40):
    """dim Q[x,y]/(f_x, f_y) + m^D at the first D where it stabilizes."""
    fx, fy = sympy.diff(expr, x), sympy.diff(expr, y)
    prev = None
    for D in range(1, max_order):
        monos = [(i, j) for i in range(D) for j in range(D - i)]
        index = {m: k for k, m in enumerate(monos)}
        rows = []
        for h in (fx, fy):
            for (a, b) in monos:
                prod = sympy.Poly(sympy.expand(h * x ** a * y ** b), x, y)
                row = [0] * len(monos)
                for (i, j), c in prod.terms():
                    if i + j < D:
                        row[index[(i, j)]] = c
                rows.append(row)
        rank = sympy.Matrix(rows).rank() if rows else 0
        dim = len(monos) - rank
        if prev is not None and dim == prev:
            return dim
        prev = dim
    raise RuntimeError("no stabilization")


def branch_count_ak(k: int) -> int:
    """Branches of v^2 - z^(k+1): two exactly when it factors over Q."""
    factors = sympy.factor_list(v ** 2 - z ** (k + 1))[1]
    return sum(m for _, m in factors)


def word_image(word, images):
    n = images[0].size
    out = SPerm(list(range(n)))
    for s in word:
        g = images[abs(s) - 1]
        out = out * (g if s > 0 else g ** -1)
    return out


def brute_homs(generators: int, relators, geometric, n: int, ctype=(2,)):
    """Every image tuple in S_n^g satisfying the relators and the constraint,
    as tuples of 0-based image lists, sorted."""
    allp = [SPerm(list(p)) for p in permutations(range(n))]
    out = []
    for tup in product(allp, repeat=generators):
        ok = True
        for i in geometric:
            lengths = sorted((len(c) for c in tup[i - 1].cyclic_form), reverse=True)
            if tuple(lengths) != tuple(ctype):
                ok = False
                break
        if not ok:
            continue
        if all(word_image(r, tup).is_Identity for r in relators):
            out.append(tuple(tuple(p.array_form) for p in tup))
    return sorted(out)


def brute_classes(tuples, n: int) -> int:
    """Number of orbits of S_n acting by simultaneous conjugation."""
    group = [SPerm(list(p)) for p in permutations(range(n))]
    remaining = set(tuples)
    count = 0
    while remaining:
        t0 = min(remaining)
        orbit = set()
        for s in group:
            orbit.add(tuple(tuple((s ** -1 * SPerm(list(p)) * s).array_form) for p in t0))
        remaining -= orbit
        count += 1
    return count


def projective_singularities(F, x, y, zz):
    """Count (nodes, cusps) of a projective curve with only ordinary nodes and
    cusps, via exact complex solutions of the gradient system on two charts."""
    nodes = cusps = 0

    def classify(g, a, b, p):
        gxx = sympy.diff(g, a, 2).subs(p)
        gyy = sympy.diff(g, b, 2).subs(p)
        gxy = sympy.diff(g, a, b).subs(p)
        det = sympy.simplify(gxx * gyy - gxy ** 2)
        return "node" if det != 0 else "cusp"

    g = F.subs(zz, 1)
    sols = sympy.solve([g, sympy.diff(g, x), sympy.diff(g, y)], [x, y], dict=True)
    for s in sols:
        if classify(g, x, y, s) == "node":
            nodes += 1
        else:
            cusps += 1
    # line at infinity, chart y = 1
    h = F.subs(y, 1)
    sols = sympy.solve([h, sympy.diff(h, x), sympy.diff(h, zz), zz], [x, zz], dict=True)
    for s in sols:
        if classify(h, x, zz, s) == "node":
            nodes += 1
        else:
            cusps += 1
    k = F.subs(x, 1)
    at = {y: 0, zz: 0}
    if all(sympy.simplify(e.subs(at)) == 0 for e in (k, sympy.diff(k, y), sympy.diff(k, zz))):
        if classify(k, y, zz, at) == "node":
            nodes += 1
        else:
            cusps += 1
    return nodes, cusps
