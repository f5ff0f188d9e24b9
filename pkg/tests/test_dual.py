import random
from fractions import Fraction

import pytest
import sympy

from chisini.algebra import parse, same_zero_set
from chisini.dual import (
    DualError,
    ParamCurve,
    dual_param,
    dualizing_passport,
    implicitize,
    singular_summary,
    tangency_incidence,
    thm8_verdict,
)
from chisini.passport import CurveNumerics, Passport, Status, pluecker_dual
from oracles import projective_singularities, sym

CONIC = ParamCurve.parse("t^2; t; 1")
NODAL = ParamCurve.parse("t^2 - 1; t^3 - t; 1")
CUSPIDAL = ParamCurve.parse("t^2; t^3; 1")
QUARTIC = ParamCurve.parse("t^4 + 1; t^3 + 2*t; t^2 + t + 3")
XYZ, UVW = ["x", "y", "z"], ["u", "v", "w"]


def test_conic_dual_parametrization():
    assert dual_param(CONIC).strings() == ["-1", "2*t", "-t^2"]


def test_conic_implicit_equations():
    assert same_zero_set(implicitize(CONIC), parse("y^2 - x*z", XYZ))
    assert same_zero_set(implicitize(dual_param(CONIC), UVW), parse("v^2 - 4*u*w", UVW))


def test_line_has_no_dual():
    with pytest.raises(DualError, match="dual degenerates to a point"):
        dual_param(ParamCurve.parse("t; 1; 0"))


def test_nodal_cubic():
    assert same_zero_set(implicitize(NODAL), parse("y^2*z - x^2*(x + z)", XYZ))
    dp = dual_param(NODAL)
    assert dp.degree == 4
    G = implicitize(dp, UVW)
    assert G.degree() == 4
    s = singular_summary(G)
    assert (s.virtual_cusps, s.virtual_nodes) == (3, 0)
    assert all(str(p.invariants.type_tag) == "A2" for p in s.points)
    assert (G.degree(), s.virtual_nodes, s.virtual_cusps) == pluecker_dual(3, 1, 0)


def test_nodal_cubic_dual_against_sympy_solver():
    u, v, w = sympy.symbols("u v w")
    F = sym(implicitize(dual_param(NODAL), UVW))
    assert projective_singularities(F, u, v, w) == (0, 3)


def test_incidence_at_random_parameters():
    rng = random.Random(20261015)
    for c in (CONIC, NODAL, CUSPIDAL, QUARTIC):
        for _ in range(20):
            t0 = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
            assert tangency_incidence(c, t0) == 0


def test_biduality_of_conic():
    back = dual_param(dual_param(CONIC))
    assert same_zero_set(implicitize(back), implicitize(CONIC))


def test_cuspidal_cubic_is_self_dual_in_numerics():
    G = implicitize(dual_param(CUSPIDAL), UVW)
    s = singular_summary(G)
    assert (G.degree(), s.virtual_nodes, s.virtual_cusps) == (3, 0, 1)


@pytest.mark.parametrize("curve,source,expected", [
    (CONIC, (2, 0, 0), (2, 0, 0)),
    (NODAL, (3, 1, 0), (4, 0, 3)),
    (QUARTIC, (4, 3, 0), (6, 4, 6)),
])
def test_degree_law(curve, source, expected):
    s = singular_summary(implicitize(curve))
    assert (s.degree, s.virtual_nodes, s.virtual_cusps) == source
    assert pluecker_dual(*source) == expected
    assert implicitize(dual_param(curve), UVW).degree() == expected[0]


def test_dualizing_passport_conic():
    dp = dualizing_passport(CONIC)
    assert dp.passport.cover_degree == 2
    assert dp.passport.cyclical_type == (2,)
    assert dp.passport.dualizing_cover
    n = dp.dual_curve_numerics
    assert (n.degree, n.virtual_nodes, n.virtual_cusps, n.genus) == (2, 0, 0, 0)


def test_dualizing_passport_nodal_cubic():
    dp = dualizing_passport(NODAL)
    n = dp.dual_curve_numerics
    assert dp.passport.cover_degree == 3
    assert (n.degree, n.virtual_cusps, n.virtual_nodes, n.genus) == (4, 3, 0, 0)
    assert dp.as_dict()["localMonodromy"] == "unpopulated"


def test_dualizing_passport_rational_quartic():
    dp = dualizing_passport(QUARTIC)
    assert dp.passport.cover_degree == 4
    assert dp.dual_curve_numerics.degree == 4 * 3 - 2 * 3


def test_dualizing_passport_needs_a_curve_of_degree_two():
    with pytest.raises(DualError):
        dualizing_passport(ParamCurve.parse("t; 1; t + 2"))


@pytest.mark.parametrize("n,g,expected", [(12, 0, Status.UNIQUE_BY_THM8), (8, 0, Status.INCONCLUSIVE),
                                          (8, 1, Status.UNIQUE_BY_THM8)])
def test_thm8_examples(n, g, expected):
    p = Passport(CurveNumerics(n * (n - 1), g, 0, 0), (2,), n, dualizing_cover=True)
    assert thm8_verdict(p).status is expected


def test_thm8_on_computed_passport():
    assert thm8_verdict(dualizing_passport(NODAL)).status is Status.INCONCLUSIVE


def test_parse_errors():
    with pytest.raises(DualError):
        ParamCurve.parse("t; 1")
    with pytest.raises(DualError):
        ParamCurve.parse("t; s; 1")
    with pytest.raises(DualError):
        ParamCurve.parse("0; 0; 0")


def test_common_factors_cleared():
    c = ParamCurve.parse("t^3 + t^2; t^2 + t; t + 1")
    assert c.strings() == ["t^2", "t", "1"]
