"""Passports of covers, Plücker numerics and the uniqueness decision rules.

A passport records the branch curve numerics, the cyclical type of a
geometric generator, the local singularity data of the branch curve and
the cover degree.  :func:`verdict` compares two passports and reports which
uniqueness rule (if any) forces the two covers to be equivalent.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction

from chisini.germs.types import TypeTag, canonical, parse_tag

PASSPORT_SCHEMA = "passport/1"
CONJECTURE_DEGREE = 5
THM3_DEGREE = 12
THM4_DEGREE = 5
CHISINI12_DEGREE = 12


class PassportError(ValueError):
    pass


def curve_genus(degree: int, virtual_nodes: int, virtual_cusps: int) -> int:
    return (degree - 1) * (degree - 2) // 2 - virtual_nodes - virtual_cusps


@dataclass(frozen=True)
class CurveNumerics:
    degree: int
    genus: int
    virtual_cusps: int
    virtual_nodes: int
    ordinary_only: bool = True

    def __post_init__(self):
        if self.degree < 1:
            raise PassportError("curve degree must be positive")
        if min(self.genus, self.virtual_cusps, self.virtual_nodes) < 0:
            raise PassportError("genus and virtual counts must be nonnegative")

    @property
    def genus_consistent(self) -> bool:
        return curve_genus(self.degree, self.virtual_nodes, self.virtual_cusps) == self.genus

    def as_dict(self) -> dict:
        return {"degree": self.degree, "genus": self.genus, "virtualCusps": self.virtual_cusps,
                "virtualNodes": self.virtual_nodes, "ordinaryOnly": self.ordinary_only}


@dataclass(frozen=True)
class LocalDatum:
    type_tag: TypeTag
    count: int = 1
    component_degrees: tuple = ()

    def as_dict(self) -> dict:
        return {"type": str(self.type_tag), "count": self.count,
                "componentDegrees": list(self.component_degrees)}


@dataclass(frozen=True)
class Passport:
    curve: CurveNumerics
    cyclical_type: tuple
    cover_degree: int
    local_data: tuple = ()
    generic_projection: bool = False
    dualizing_cover: bool = False

    def __post_init__(self):
        if not self.cyclical_type or any(x < 2 for x in self.cyclical_type):
            raise PassportError("cyclical type entries must be at least 2")
        if self.cover_degree < 1:
            raise PassportError("cover degree must be positive")
        if sum(self.cyclical_type) > self.cover_degree:
            raise PassportError("cyclical type does not fit in the cover degree")
        for d in self.local_data:
            if d.count < 1:
                raise PassportError("local datum count must be positive")
            if sum(d.component_degrees) > self.cover_degree:
                raise PassportError(f"component degrees at {d.type_tag} exceed the cover degree")
        object.__setattr__(self, "cyclical_type", tuple(sorted(self.cyclical_type, reverse=True)))

    @property
    def local_types(self) -> set:
        return {canonical(d.type_tag) for d in self.local_data}

    @property
    def has_singular_local_data(self) -> bool:
        return any(t != TypeTag("A", (0,)) for t in self.local_types)

    def as_dict(self) -> dict:
        return {
            "schema": PASSPORT_SCHEMA,
            "curve": self.curve.as_dict(),
            "cyclicalType": list(self.cyclical_type),
            "coverDegree": self.cover_degree,
            "flags": {"genericProjection": self.generic_projection,
                      "dualizingCover": self.dualizing_cover},
            "localData": [d.as_dict() for d in self.local_data],
        }


def _field(doc, key, path, kind):
    if key not in doc:
        raise PassportError(f"{path}.{key}: missing")
    val = doc[key]
    if kind is int and (not isinstance(val, int) or isinstance(val, bool)):
        raise PassportError(f"{path}.{key}: expected an integer")
    if kind is bool and not isinstance(val, bool):
        raise PassportError(f"{path}.{key}: expected a boolean")
    if kind is list and not isinstance(val, list):
        raise PassportError(f"{path}.{key}: expected a list")
    if kind is dict and not isinstance(val, dict):
        raise PassportError(f"{path}.{key}: expected an object")
    return val


def passport_from_json(doc) -> Passport:
    if not isinstance(doc, dict):
        raise PassportError("$: expected an object")
    if doc.get("schema") != PASSPORT_SCHEMA:
        raise PassportError(f"$.schema: expected {PASSPORT_SCHEMA!r}")
    c = _field(doc, "curve", "$", dict)
    curve = CurveNumerics(
        _field(c, "degree", "$.curve", int),
        _field(c, "genus", "$.curve", int),
        _field(c, "virtualCusps", "$.curve", int),
        _field(c, "virtualNodes", "$.curve", int),
        _field(c, "ordinaryOnly", "$.curve", bool),
    )
    ctype = _field(doc, "cyclicalType", "$", list)
    for i, x in enumerate(ctype):
        if not isinstance(x, int) or isinstance(x, bool):
            raise PassportError(f"$.cyclicalType[{i}]: expected an integer")
    flags = doc.get("flags", {})
    if not isinstance(flags, dict):
        raise PassportError("$.flags: expected an object")
    local = []
    for i, d in enumerate(doc.get("localData", [])):
        path = f"$.localData[{i}]"
        if not isinstance(d, dict):
            raise PassportError(f"{path}: expected an object")
        try:
            tag = parse_tag(str(_field(d, "type", path, str)))
        except ValueError as e:
            raise PassportError(f"{path}.type: {e}") from None
        degs = d.get("componentDegrees", [])
        if not isinstance(degs, list) or not all(isinstance(x, int) and x >= 1 for x in degs):
            raise PassportError(f"{path}.componentDegrees: expected positive integers")
        local.append(LocalDatum(tag, d.get("count", 1), tuple(degs)))
    return Passport(curve, tuple(ctype), _field(doc, "coverDegree", "$", int), tuple(local),
                    bool(flags.get("genericProjection", False)), bool(flags.get("dualizingCover", False)))


def load_passport(path) -> Passport:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise PassportError(f"$: invalid JSON: {e.msg} at line {e.lineno}") from None
    return passport_from_json(doc)


# -- formulas ---------------------------------------------------------------------

def thm2_bound(d: int, g: int, c: int) -> Fraction:
    """``4(3d+g-1) / (2(3d+g-1) - c)`` for a branch curve of degree ``2d``,
    genus ``g`` with ``c`` cusps."""
    a = 3 * d + g - 1
    den = 2 * a - c
    if den <= 0:
        raise ValueError("bound inapplicable: nonpositive denominator")
    return Fraction(4 * a, den)


def pluecker_dual(n: int, n_v: int, c_v: int) -> tuple[int, int, int]:
    """Degree, virtual nodes and virtual cusps of the dual curve."""
    if n < 1 or n_v < 0 or c_v < 0:
        raise ValueError("invalid curve numerics")
    g = curve_genus(n, n_v, c_v)
    m = n * (n - 1) - 2 * n_v - 3 * c_v
    c_star = 3 * n * (n - 2) - 6 * n_v - 8 * c_v
    n_star = (m - 1) * (m - 2) // 2 - g - c_star
    if g < 0 or m < 0 or c_star < 0 or n_star < 0:
        raise ValueError("invalid curve numerics")
    return m, n_star, c_star


def extra_property_rhs(delta: int, c_v: int) -> int:
    if delta < 0 or c_v < 0:
        raise ValueError("delta and c_v must be nonnegative")
    return 2 * delta + c_v


@dataclass(frozen=True)
class ExtraPropertyCheck:
    """The extra-property inequality at one component, with a left-hand side
    supplied by the caller (it is an intersection number on a resolution and
    is never computed here)."""

    component_degree: int
    lhs: int
    delta: int
    c_v: int

    @property
    def rhs(self) -> int:
        return extra_property_rhs(self.delta, self.c_v)

    @property
    def holds(self) -> bool:
        return self.component_degree <= 2 or self.lhs <= self.rhs

    def as_dict(self) -> dict:
        return {"componentDegree": self.component_degree, "lhs": self.lhs, "rhs": self.rhs,
                "holds": self.holds}


# -- membership in the Chisini-12 set ---------------------------------------------

class Membership(enum.Enum):
    KNOWN_IN = "KnownIn"
    CONJECTURAL = "Conjectural"
    UNKNOWN = "Unknown"


def tch12_membership(tag) -> Membership:
    if isinstance(tag, str):
        tag = parse_tag(tag)
    if tag.kind == "T":
        n, m = tag.params
        if n >= 2 and m == 1:
            return Membership.KNOWN_IN
        if n >= 2 and m >= 2:
            return Membership.CONJECTURAL
        return Membership.UNKNOWN
    t = canonical(tag)
    if t.kind == "A" and (t.params[0] == 0 or t.params[0] % 3 == 2):
        return Membership.KNOWN_IN
    if t.kind == "E" and t.params == (6,):
        return Membership.KNOWN_IN
    if t.kind == "Torus":
        p, q = t.params
        if q == p + 1:
            # T(p+1, 1) is the torus type (p, p+1)
            return Membership.KNOWN_IN
    return Membership.UNKNOWN


# -- verdict ----------------------------------------------------------------------

class Status(enum.Enum):
    UNIQUE_BY_THM0 = "UniqueByThm0"
    UNIQUE_BY_THM2 = "UniqueByThm2"
    UNIQUE_BY_THM3 = "UniqueByThm3"
    UNIQUE_BY_THM4 = "UniqueByThm4"
    UNIQUE_BY_CHISINI12 = "UniqueByChisini12"
    UNIQUE_BY_THM8 = "UniqueByThm8"
    NO_CONSTANT_POSSIBLE = "NoConstantPossible"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: tuple = ()
    advisories: tuple = field(default=(), compare=False)

    def as_dict(self) -> dict:
        return {"status": self.status.value, "witness": [dict(w) for w in self.witness],
                "advisories": list(self.advisories)}


_A0 = TypeTag("A", (0,))
_A2 = TypeTag("A", (2,))


def _ordinary_types(p: Passport) -> bool:
    return p.local_types <= {_A0, _A2}


def _thm8_holds(degree: int, genus: int) -> bool:
    return (degree >= 8 and genus >= 1) or (degree >= 12 and genus == 0)


def verdict(p1: Passport, p2: Passport) -> Verdict:
    if p1.curve != p2.curve or p1.cyclical_type != p2.cyclical_type:
        return Verdict(Status.INCONCLUSIVE, ({"rule": "passportsDiffer"},))
    curve, ctype = p1.curve, p1.cyclical_type
    top = max(p1.cover_degree, p2.cover_degree)
    found = []

    if len(ctype) == 1 and not p1.has_singular_local_data and not p2.has_singular_local_data:
        found.append((Status.UNIQUE_BY_THM0, {"rule": "Thm0", "cyclicalType": list(ctype)}))

    if len(ctype) >= 2 and all(x == 2 for x in ctype) and _ordinary_types(p1) and _ordinary_types(p2):
        found.append((Status.NO_CONSTANT_POSSIBLE, {"rule": "Prop1", "cyclicalType": list(ctype)}))

    generic = ctype == (2,) and _ordinary_types(p1) and _ordinary_types(p2)
    if generic and curve.ordinary_only:
        if curve.degree % 2 == 0:
            try:
                b = thm2_bound(curve.degree // 2, curve.genus, curve.virtual_cusps)
            except ValueError:
                b = None
            if b is not None and top > b:
                found.append((Status.UNIQUE_BY_THM2, {"rule": "Thm2", "bound": str(b), "maxDegree": top}))
        if top >= THM3_DEGREE:
            found.append((Status.UNIQUE_BY_THM3, {"rule": "Thm3", "threshold": THM3_DEGREE, "maxDegree": top}))
        for p in (p1, p2):
            if p.generic_projection and p.cover_degree >= THM4_DEGREE:
                found.append((Status.UNIQUE_BY_THM4, {"rule": "Thm4", "threshold": THM4_DEGREE,
                                                      "projectionDegree": p.cover_degree}))
                break

    if ctype == (2,) and top >= CHISINI12_DEGREE:
        tags = [d.type_tag for p in (p1, p2) for d in p.local_data]
        if all(tch12_membership(t) is Membership.KNOWN_IN for t in tags):
            found.append((Status.UNIQUE_BY_CHISINI12, {"rule": "Thm5", "threshold": CHISINI12_DEGREE,
                                                       "maxDegree": top}))

    for p in (p1, p2):
        if p.dualizing_cover and _thm8_holds(p.cover_degree, curve.genus):
            found.append((Status.UNIQUE_BY_THM8, {"rule": "Thm8", "coverDegree": p.cover_degree}))
            break

    advisories = []
    if generic and top >= CONJECTURE_DEGREE:
        advisories.append(f"Chisini conjecture (constant {CONJECTURE_DEGREE}) would apply; not a proof")
    if not found:
        return Verdict(Status.INCONCLUSIVE, (), tuple(advisories))
    return Verdict(found[0][0], tuple(w for _, w in found), tuple(advisories))
