"""Plane curve germs at the origin and their invariants."""
from __future__ import annotations

import threading
from dataclasses import dataclass, field

from chisini.algebra.elimination import is_squarefree
from chisini.algebra.fields import QQ
from chisini.algebra.poly import MultiPoly, parse
from chisini.germs import bivariate as bv
from chisini.germs.milnor import local_algebra_milnor
from chisini.germs.puiseux import PuiseuxBranch, expand_branches
from chisini.germs.types import TypeTag, classify


class GermError(ValueError):
    pass


class CurveGerm:
    """Germ at ``(0, 0)`` of the curve ``equation = 0``.

    ``equation`` is a :class:`MultiPoly` over the rationals, or a coefficient
    dict ``{(i, j): c}`` over ``domain`` (a number field given as an
    :class:`~chisini.algebra.fields.EtaleAlgebra` with irreducible modulus).
    Branches are computed once, on first use.
    """

    def __init__(self, equation, zvar: str = "z", vvar: str = "v", domain=QQ,
                 check: bool = True):
        self.zvar, self.vvar = zvar, vvar
        self.domain = domain
        if isinstance(equation, str):
            equation = parse(equation, [zvar, vvar])
        if isinstance(equation, MultiPoly):
            if check:
                if equation.is_zero():
                    raise GermError("zero equation")
                if not is_squarefree(equation):
                    raise GermError("equation is not square-free: reduce first")
            self.equation = equation.with_variables((zvar, vvar))
            self._p = bv.from_multipoly(equation, domain, zvar, vvar)
        else:
            self.equation = None
            self._p = bv.clean(dict(equation), domain)
        if not self._p:
            raise GermError("zero equation")
        if not domain.is_zero(bv.evaluate_at_origin(self._p, domain)):
            raise GermError("germ equation does not vanish at the origin")
        self._lock = threading.Lock()
        self._branches = None
        self._shear = None
        self._milnor = None

    @property
    def coefficients(self) -> dict:
        return dict(self._p)

    def __repr__(self) -> str:
        body = str(self.equation) if self.equation is not None else f"{len(self._p)} terms over {self.domain!r}"
        return f"CurveGerm({body})"

    # -- cached computations -------------------------------------------
    def _transversal(self):
        """First shear ``s = 0, 1, 2, ...`` after which ``z = 0`` is not
        tangent: the coefficient of ``v^mult`` in the sheared germ is a unit."""
        dom = self.domain
        mult = bv.order(self._p, dom)
        s = 0
        while True:
            q = bv.shear(self._p, s, dom)
            if not dom.is_zero(q.get((0, mult), dom.zero)):
                return s, q
            s += 1

    def _compute(self):
        s, q = self._transversal()
        brs = expand_branches(q, self.domain)
        mult = bv.order(self._p, self.domain)
        if sum(b.ramification_index * b.conjugacy_class_size for b in brs) != mult:
            raise ArithmeticError("branch multiplicities do not add up to the multiplicity")
        return s, tuple(brs)

    def branch_classes(self) -> tuple:
        if self._branches is None:
            with self._lock:
                if self._branches is None:
                    self._shear, self._branches = self._compute()
        return self._branches

    @property
    def shear(self) -> int:
        self.branch_classes()
        return self._shear

    def milnor(self) -> int:
        if self._milnor is None:
            with self._lock:
                if self._milnor is None:
                    self._milnor = local_algebra_milnor(self._p, self.domain)
        return self._milnor


def _germ(g) -> CurveGerm:
    return g if isinstance(g, CurveGerm) else CurveGerm(g)


def branches(g) -> list[PuiseuxBranch]:
    return list(_germ(g).branch_classes())


def branch_count(g) -> int:
    return sum(b.conjugacy_class_size for b in branches(g))


def multiplicity(g) -> int:
    g = _germ(g)
    return bv.order(g._p, g.domain)


def milnor_number(g) -> int:
    return _germ(g).milnor()


def delta_invariant(g) -> int:
    twice = milnor_number(g) + branch_count(g) - 1
    if twice % 2:
        raise ArithmeticError("odd value of mu + r - 1")
    return twice // 2


def virtual_cusps(g) -> int:
    return sum((b.multiplicity - 1) * b.conjugacy_class_size for b in branches(g))


def virtual_nodes(g) -> int:
    n = delta_invariant(g) - virtual_cusps(g)
    if n < 0:
        raise ArithmeticError("negative virtual node count")
    return n


def recognize_type(g) -> TypeTag:
    g = _germ(g)
    brs = branches(g)
    r = sum(b.conjugacy_class_size for b in brs)
    chars = brs[0].characteristic_exponents if r == 1 else ()
    return classify(multiplicity(g), milnor_number(g), r, chars)


@dataclass(frozen=True)
class GermInvariants:
    multiplicity: int
    branch_count: int
    milnor: int
    delta: int
    virtual_cusps: int
    virtual_nodes: int
    type_tag: TypeTag
    branches: tuple = field(default=(), compare=False)

    def as_dict(self) -> dict:
        return {
            "multiplicity": self.multiplicity,
            "branchCount": self.branch_count,
            "milnor": self.milnor,
            "delta": self.delta,
            "virtualCusps": self.virtual_cusps,
            "virtualNodes": self.virtual_nodes,
            "type": str(self.type_tag),
            "branches": [b.as_dict() for b in self.branches],
        }


def invariants(g) -> GermInvariants:
    g = _germ(g)
    brs = branches(g)
    r = sum(b.conjugacy_class_size for b in brs)
    mu = milnor_number(g)
    delta = delta_invariant(g)
    cv = virtual_cusps(g)
    nv = virtual_nodes(g)
    if 2 * delta != mu + r - 1 or cv + nv != delta:
        raise ArithmeticError("inconsistent germ invariants")
    return GermInvariants(multiplicity(g), r, mu, delta, cv, nv, recognize_type(g), tuple(brs))
