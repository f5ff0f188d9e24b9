"""Branch curves of the cover germs ``(z, w) -> (z, w^n - n*w*z^m)``."""
from __future__ import annotations

from dataclasses import dataclass

from chisini.algebra import MultiPoly, discriminant, same_zero_set, squarefree_part
from chisini.germs import CurveGerm, GermInvariants, invariants
from chisini.germs.types import TypeTag, canonical, model_tag


@dataclass(frozen=True)
class ModelCover:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("model degree n must be at least 2")
        if self.m < 1:
            raise ValueError("model exponent m must be at least 1")

    def defining_map(self) -> tuple[MultiPoly, MultiPoly]:
        vs = ("z", "w")
        z = MultiPoly.var("z", vs)
        w = MultiPoly.var("w", vs)
        return z, w ** self.n - self.n * w * z ** self.m


def expected_branch_equation(n: int, m: int = 1) -> MultiPoly:
    """``v^(n-1) - (1-n)^(n-1) * z^(n*m)``; for ``m > 1`` this is the
    ``m = 1`` curve with ``z`` replaced by ``z^m``."""
    vs = ("z", "v")
    z = MultiPoly.var("z", vs)
    v = MultiPoly.var("v", vs)
    return v ** (n - 1) - (1 - n) ** (n - 1) * z ** (n * m)


def branch_polynomial(n: int, m: int) -> MultiPoly:
    cover = ModelCover(n, m)
    vs = ("z", "v", "w")
    z = MultiPoly.var("z", vs)
    v = MultiPoly.var("v", vs)
    w = MultiPoly.var("w", vs)
    f = w ** cover.n - cover.n * w * z ** cover.m - v
    disc = discriminant(f, "w").with_variables(("z", "v"))
    return squarefree_part(disc)


def branch_curve(n: int, m: int) -> CurveGerm:
    return CurveGerm(branch_polynomial(n, m), "z", "v")


@dataclass(frozen=True)
class ModelReport:
    n: int
    m: int
    branch_germ: CurveGerm
    invariants: GermInvariants
    model_tag: TypeTag
    matches_closed_form: bool

    @property
    def model_degree(self) -> int:
        return self.n

    @property
    def nondegenerate(self) -> bool:
        return self.n == self.invariants.multiplicity + 1

    @property
    def derived(self) -> bool:
        # the closed form is quoted only for m = 1
        return self.m != 1

    def as_dict(self) -> dict:
        out = self.invariants.as_dict()
        out.update({
            "n": self.n,
            "m": self.m,
            "modelDegree": self.n,
            "modelTag": str(self.model_tag),
            "branchEquation": str(self.branch_germ.equation),
            "nondegenerate": self.nondegenerate,
            "matchesClosedForm": self.matches_closed_form,
            "closedFormStatus": "derived" if self.derived else "quoted",
        })
        return out


def model_report(n: int, m: int) -> ModelReport:
    germ = branch_curve(n, m)
    inv = invariants(germ)
    ok = same_zero_set(germ.equation, expected_branch_equation(n, m))
    return ModelReport(n, m, germ, inv, model_tag(n, m), ok)


def tch12_model_family(n_max: int) -> list[tuple[int, TypeTag, bool]]:
    """``(n, type, in_set)`` for the ``m = 1`` models, ``n = 2..n_max``."""
    from chisini.passport import Membership, tch12_membership

    if n_max < 2:
        raise ValueError("nMax must be at least 2")
    rows = []
    for n in range(2, n_max + 1):
        tag = model_report(n, 1).invariants.type_tag
        if canonical(tag) != canonical(model_tag(n, 1)):
            raise ArithmeticError(f"model n={n} has type {tag}, expected T({n},1)")
        rows.append((n, tag, tch12_membership(model_tag(n, 1)) is Membership.KNOWN_IN))
    return rows
