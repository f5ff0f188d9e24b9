from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chisini.algebra import parse
from chisini.germs import (
    CurveGerm,
    GermError,
    NonIsolatedSingularity,
    branch_count,
    branches,
    delta_invariant,
    invariants,
    milnor_number,
    multiplicity,
    recognize_type,
    resultant_milnor,
    virtual_cusps,
    virtual_nodes,
)
from chisini.germs.types import TypeTag, parse_tag
from oracles import branch_count_ak, local_algebra_dim, v, z

ZV = ["z", "v"]


def G(text):
    return CurveGerm(parse(text, ZV))


def test_node_has_two_smooth_branches():
    brs = branches(G("v^2 - z^2"))
    assert sum(b.conjugacy_class_size for b in brs) == 2
    assert all(b.multiplicity == 1 for b in brs)


def test_cusp_branch():
    (b,) = branches(G("v^2 - 4*z^3"))
    assert b.ramification_index == 2
    assert b.characteristic_exponents == (Fraction(3, 2),)


def test_e6_branch():
    (b,) = branches(G("v^3 + 27*z^4"))
    assert b.ramification_index == 3
    assert b.characteristic_exponents == (Fraction(4, 3),)


def test_conjugate_branches_are_grouped():
    # v^2 + z^2 splits only over Q(i): one class of two smooth branches
    (b,) = branches(G("v^2 + z^2"))
    assert b.conjugacy_class_size == 2
    assert branch_count(G("v^2 + z^2")) == 2


def test_axis_components():
    g = G("z*v*(v - z)")
    assert branch_count(g) == 3
    assert multiplicity(g) == 3
    g = G("z*(v^2 - z^3)")
    assert branch_count(g) == 2


@pytest.mark.parametrize("text,expected", [("v + z^2", 1), ("v^2 - 4*z^3", 2), ("v^3 + 27*z^4", 3)])
def test_multiplicity(text, expected):
    assert multiplicity(G(text)) == expected


@pytest.mark.parametrize("text", ["v^2 - z^2", "v^2 - 4*z^3", "v^3 + 27*z^4", "v^2 - z^4",
                                  "(v - z^2)^2 - z^5", "v^4 - z^5", "(v^2 - z^3)*(v^2 + z^3)",
                                  "v^3 - z^3", "z*v*(v - z)*(v + 2*z)", "(v^2 - 2*z^3)^2 - z^7"])
def test_milnor_routes_agree_with_oracle(text):
    f = parse(text, ZV)
    oracle = local_algebra_dim(parse_sym(text))
    assert milnor_number(CurveGerm(f)) == oracle
    assert resultant_milnor(f) == oracle


def parse_sym(text):
    import sympy

    return sympy.sympify(text.replace("^", "**"), locals={"z": z, "v": v})


@pytest.mark.parametrize("text,mu,delta,cv,nv", [
    ("v^2 - z^2", 1, 1, 0, 1),
    ("v^2 - 4*z^3", 2, 1, 1, 0),
    ("v^3 + 27*z^4", 6, 3, 2, 1),
    ("v^2 - z^4", 3, 2, 0, 2),
])
def test_invariant_examples(text, mu, delta, cv, nv):
    g = G(text)
    assert (milnor_number(g), delta_invariant(g), virtual_cusps(g), virtual_nodes(g)) == (mu, delta, cv, nv)


@pytest.mark.parametrize("k", range(0, 9))
def test_ak_family_table(k):
    f = f"v^2 - z^{k + 1}"
    mu = local_algebra_dim(v ** 2 - z ** (k + 1))
    r = branch_count_ak(k)
    inv = invariants(G(f))
    assert inv.milnor == mu == k
    assert inv.branch_count == r
    assert inv.multiplicity == (1 if k == 0 else 2)
    assert inv.delta == (mu + r - 1) // 2 == -(-k // 2)
    assert inv.virtual_cusps == (1 if k % 2 == 0 and k >= 2 else 0)
    assert inv.virtual_nodes == inv.delta - inv.virtual_cusps
    assert str(inv.type_tag) == f"A{k}"


@pytest.mark.parametrize("text,tag", [("v + z^2", "A0"), ("v^2 - 4*z^3", "A2"), ("v^3 + 27*z^4", "E6"),
                                      ("v^4 - z^5", "Torus(4,5)"), ("v^3 - z^3", "Other"),
                                      ("(v^2 - z^3)*(v^2 + z^3)", "Other")])
def test_type_recognition(text, tag):
    assert recognize_type(G(text)) == parse_tag(tag)


def test_identities_on_mixed_germs():
    for text in ["(v - z^2)*(v^2 - z^5)", "v^5 - z^7", "(v^3 - z^2)*(v - z)", "v^4 + z^4 + z^5"]:
        inv = invariants(G(text))
        assert 2 * inv.delta == inv.milnor + inv.branch_count - 1
        assert inv.virtual_cusps + inv.virtual_nodes == inv.delta


def test_non_squarefree_rejected():
    with pytest.raises(GermError, match="reduce first"):
        G("(v - z^2)^2")


def test_must_vanish_at_origin():
    with pytest.raises(GermError):
        G("v + 1")


def test_non_isolated_singularity_rejected_by_resultant_route():
    # z^2 is not square-free, so bypass the germ check
    with pytest.raises(NonIsolatedSingularity):
        resultant_milnor(parse("z^2*v", ZV))


def test_branch_multiplicities_symmetric_in_axes():
    for text in ["v^2 - z^2*(z + 1)", "(v - 2*z)*(v^2 - z^3 - z^2)"]:
        f = parse(text, ZV)
        swapped = f.rename({"z": "v", "v": "z"}).with_variables(ZV)
        m1 = sorted(b.multiplicity for b in branches(CurveGerm(f)) for _ in range(b.conjugacy_class_size))
        m2 = sorted(b.multiplicity for b in branches(CurveGerm(swapped)) for _ in range(b.conjugacy_class_size))
        assert m1 == m2


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["v^2 - 4*z^3", "v^3 + 27*z^4", "v^2 - z^4", "v^4 - z^5", "v^2 - z^6", "z*v"]),
       st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(lambda a: a != 0),
       st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(lambda b: b != 0))
def test_type_invariant_under_rescaling(text, a, b):
    f = parse(text, ZV)
    zz, vv = parse("z", ZV), parse("v", ZV)
    g = f.subs({"z": zz * a, "v": vv * b}).with_variables(ZV)
    assert recognize_type(CurveGerm(g)) == recognize_type(CurveGerm(f))


def test_branch_cache_is_shared_across_threads():
    from concurrent.futures import ThreadPoolExecutor

    g = G("(v^2 - 2*z^3)^2 - z^7")
    with ThreadPoolExecutor(4) as ex:
        results = list(ex.map(lambda _: g.branch_classes(), range(8)))
    assert all(r is results[0] for r in results)


def test_tag_round_trip():
    for t in [TypeTag("A", (5,)), TypeTag("E", (6,)), TypeTag("Torus", (4, 5)), TypeTag("T", (4, 2)),
              TypeTag("Other")]:
        assert parse_tag(str(t)) == t
    assert parse_tag("T_{4,2}") == TypeTag("T", (4, 2))
