"""Singularity type tags.

Tags print as ``A0``, ``A5``, ``E6``, ``Torus(4,5)``, ``Other``.  The model
family of the local cover ``v = w^n - n*w*z^m`` uses its own notation
``T(n,m)``; see :func:`model_tag`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class TypeTag:
    kind: str  # "A", "E", "Torus", "T", "Other"
    params: tuple = ()

    def __str__(self) -> str:
        if self.kind == "A":
            return f"A{self.params[0]}"
        if self.kind == "E":
            return f"E{self.params[0]}"
        if self.kind in ("Torus", "T"):
            return f"{self.kind}({self.params[0]},{self.params[1]})"
        return "Other"

    def to_json(self) -> str:
        return str(self)


_PATTERNS = [
    (re.compile(r"^A_?\{?(\d+)\}?$"), "A"),
    (re.compile(r"^E_?\{?(\d+)\}?$"), "E"),
    (re.compile(r"^Torus\((\d+),(\d+)\)$"), "Torus"),
    (re.compile(r"^T_?[\(\{]?(\d+),(\d+)[\)\}]?$"), "T"),
]


def parse_tag(text: str) -> TypeTag:
    """Inverse of ``str(tag)``; also accepts ``A_2``, ``T_{4,2}`` spellings."""
    s = text.replace(" ", "")
    if s == "Other":
        return TypeTag("Other")
    for pat, kind in _PATTERNS:
        m = pat.match(s)
        if m:
            return TypeTag(kind, tuple(int(g) for g in m.groups()))
    raise ValueError(f"unrecognized singularity type {text!r}")


def A(k: int) -> TypeTag:
    return TypeTag("A", (k,))


E6 = TypeTag("E", (6,))
OTHER = TypeTag("Other")


def model_tag(n: int, m: int) -> TypeTag:
    return TypeTag("T", (n, m))


def classify(multiplicity: int, milnor: int, branch_count: int, char_exponents: tuple) -> TypeTag:
    """Type from invariants.  ``char_exponents`` are those of the single
    branch when ``branch_count == 1`` (ignored otherwise)."""
    if multiplicity <= 1:
        return A(0)
    if multiplicity == 2:
        return A(milnor)
    if branch_count == 1 and len(char_exponents) == 1:
        e = Fraction(char_exponents[0])
        p, q = e.denominator, e.numerator
        if (multiplicity, milnor, p, q) == (3, 6, 3, 4):
            return E6
        if p == multiplicity:
            return TypeTag("Torus", (p, q))
    return OTHER


def same_type(a: TypeTag, b: TypeTag) -> bool:
    """Compare tags, identifying the low torus types with their ADE names."""
    return canonical(a) == canonical(b)


def canonical(t: TypeTag) -> TypeTag:
    if t.kind == "Torus":
        p, q = t.params
        if p == 2:
            return A(q - 1)
        if (p, q) == (3, 4):
            return E6
    if t.kind == "T":
        n, m = t.params
        if m == 1:
            if n == 2:
                return A(0)
            return canonical(TypeTag("Torus", (n - 1, n)))
    return t
