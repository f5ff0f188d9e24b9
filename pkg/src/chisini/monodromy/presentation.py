"""Finite presentations with marked geometric generators.

Words are sequences of signed 1-based generator indices: ``[1, 2, -1]`` is
``a b a^-1``.  Files use the ``presentation/1`` JSON schema::

    {"schema": "presentation/1", "name": ..., "generators": [...],
     "relators": [[...], ...], "geometric": [1, 2], "provenance": "...",
     "expectations": {"abelianization": [0],
                      "homCounts": [{"degree": 3, "type": [2], "count": 9}]}}
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

SCHEMA = "presentation/1"


class SchemaError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class FinitePresentation:
    generators: tuple
    relators: tuple
    geometric: tuple
    name: str = ""
    provenance: str = ""
    expectations: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        g = len(self.generators)
        if g == 0:
            raise ValueError("presentation needs at least one generator")
        for w in self.relators:
            for x in w:
                if x == 0 or abs(x) > g:
                    raise ValueError(f"relator {list(w)} uses an undeclared generator")
        if not self.geometric:
            raise ValueError("no geometric generators marked")
        for i in self.geometric:
            if not 1 <= i <= g:
                raise ValueError(f"geometric generator {i} out of range")

    @property
    def rank(self) -> int:
        return len(self.generators)

    def word_str(self, w) -> str:
        parts = []
        for x in w:
            name = self.generators[abs(x) - 1]
            parts.append(name if x > 0 else f"{name}^-1")
        return "*".join(parts) or "1"

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA,
            "name": self.name,
            "generators": list(self.generators),
            "relators": [list(w) for w in self.relators],
            "geometric": list(self.geometric),
            "provenance": self.provenance,
        }
        if self.expectations:
            out["expectations"] = self.expectations
        return out


def _require(cond: bool, path: str, msg: str):
    if not cond:
        raise SchemaError(path, msg)


def presentation_from_json(doc) -> FinitePresentation:
    """Validate a ``presentation/1`` record; errors name the failing field."""
    _require(isinstance(doc, dict), "$", "expected an object")
    _require(doc.get("schema") == SCHEMA, "$.schema", f"expected {SCHEMA!r}")
    for key in ("name", "generators", "relators", "geometric", "provenance"):
        _require(key in doc, f"$.{key}", "missing")
    _require(isinstance(doc["name"], str), "$.name", "expected a string")
    _require(isinstance(doc["provenance"], str), "$.provenance", "expected a string")
    gens = doc["generators"]
    _require(isinstance(gens, list) and gens, "$.generators", "expected a nonempty list")
    for i, g in enumerate(gens):
        _require(isinstance(g, str) and g, f"$.generators[{i}]", "expected a name")
    _require(len(set(gens)) == len(gens), "$.generators", "repeated name")
    rels = doc["relators"]
    _require(isinstance(rels, list), "$.relators", "expected a list")
    for i, w in enumerate(rels):
        _require(isinstance(w, list), f"$.relators[{i}]", "expected a list of signed indices")
        for j, x in enumerate(w):
            _require(isinstance(x, int) and not isinstance(x, bool) and 1 <= abs(x) <= len(gens),
                     f"$.relators[{i}][{j}]", "expected a signed generator index")
    geo = doc["geometric"]
    _require(isinstance(geo, list) and geo, "$.geometric", "expected a nonempty list")
    for i, x in enumerate(geo):
        _require(isinstance(x, int) and not isinstance(x, bool) and 1 <= x <= len(gens),
                 f"$.geometric[{i}]", "expected a generator index")
    exp = doc.get("expectations", {})
    _require(isinstance(exp, dict), "$.expectations", "expected an object")
    if "abelianization" in exp:
        ab = exp["abelianization"]
        _require(isinstance(ab, list) and all(isinstance(x, int) and x >= 0 for x in ab),
                 "$.expectations.abelianization", "expected a list of nonnegative integers")
    for i, hc in enumerate(exp.get("homCounts", [])):
        path = f"$.expectations.homCounts[{i}]"
        _require(isinstance(hc, dict), path, "expected an object")
        for key in ("degree", "type", "count"):
            _require(key in hc, f"{path}.{key}", "missing")
        _require(isinstance(hc["degree"], int) and hc["degree"] >= 1, f"{path}.degree",
                 "expected a positive integer")
        _require(isinstance(hc["type"], list) and all(isinstance(x, int) and x >= 2 for x in hc["type"]),
                 f"{path}.type", "expected cycle lengths >= 2")
        _require(isinstance(hc["count"], int) and hc["count"] >= 0, f"{path}.count",
                 "expected a nonnegative integer")
    return FinitePresentation(
        tuple(gens),
        tuple(tuple(w) for w in rels),
        tuple(sorted(set(geo))),
        doc["name"],
        doc["provenance"],
        exp,
    )


def load_presentation(path) -> FinitePresentation:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise SchemaError("$", f"invalid JSON: {e.msg} at line {e.lineno}") from None
    return presentation_from_json(doc)


def data_dir() -> Path:
    env = os.environ.get("CHISINI_DATA_DIR")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent.parent / "data" / "presentations"


def data_pack() -> dict:
    """All shipped presentations, keyed by file stem."""
    d = data_dir()
    return {p.stem: load_presentation(p) for p in sorted(d.glob("*.json"))}


def find_presentation(name_or_path: str) -> FinitePresentation:
    p = Path(name_or_path)
    if p.suffix == ".json" or p.exists():
        return load_presentation(p)
    return load_presentation(data_dir() / f"{name_or_path}.json")


# -- generated families -------------------------------------------------------

def alternating_word(a: int, b: int, length: int) -> list:
    return [a if i % 2 == 0 else b for i in range(length)]


def ak_presentation(k: int) -> FinitePresentation:
    """Local group of ``v^2 = z^(k+1)``: alternating words of length ``k+1``
    in ``a, b`` agree (``k = 1`` commuting, ``k = 2`` braid relation)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    lhs = alternating_word(1, 2, k + 1)
    rhs = alternating_word(2, 1, k + 1)
    rel = lhs + [-x for x in reversed(rhs)]
    return FinitePresentation(("a", "b"), (tuple(rel),), (1, 2), f"A{k}",
                              f"local group of v^2 = z^{k + 1}, alternating relation of length {k + 1}")


def free_presentation(rank: int = 1) -> FinitePresentation:
    names = tuple("abcdefgh"[i] for i in range(rank))
    return FinitePresentation(names, (), tuple(range(1, rank + 1)), f"free_rank{rank}",
                              "free group (complement of a smooth germ when rank 1)")


def _artin_image(word: list, i: int, sign: int) -> list:
    """Apply the Artin generator ``sigma_i^sign`` (1-based) to a word."""
    out = []
    for x in word:
        g, e = abs(x), (1 if x > 0 else -1)
        if sign > 0:
            if g == i:
                img = [i, i + 1, -i]
            elif g == i + 1:
                img = [i]
            else:
                img = [g]
        else:
            if g == i:
                img = [i + 1]
            elif g == i + 1:
                img = [-(i + 1), i, i + 1]
            else:
                img = [g]
        if e < 0:
            img = [-y for y in reversed(img)]
        out.extend(img)
    return free_reduce(out)


def free_reduce(word) -> list:
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def braid_action(braid: list, word: list) -> list:
    """Right action of a braid word (signed Artin indices) on a free word."""
    for s in braid:
        word = _artin_image(word, abs(s), 1 if s > 0 else -1)
    return word


def torus_germ_presentation(p: int, q: int) -> FinitePresentation:
    """Local group of ``v^p = z^q`` from the monodromy braid
    ``(sigma_1 ... sigma_{p-1})^q`` via relations ``g_j = beta(g_j)``."""
    if p < 2 or q < 1:
        raise ValueError("need p >= 2 and q >= 1")
    braid = list(range(1, p)) * q
    rels = []
    for j in range(1, p + 1):
        img = braid_action(braid, [j])
        rel = free_reduce(img + [-j])
        # cyclic reduction keeps relators short
        while len(rel) >= 2 and rel[0] == -rel[-1]:
            rel = rel[1:-1]
        if rel:
            rels.append(tuple(rel))
    names = tuple(f"g{j}" for j in range(1, p + 1))
    return FinitePresentation(names, tuple(rels), tuple(range(1, p + 1)), f"torus_{p}_{q}",
                              f"local group of v^{p} = z^{q}: Artin action of the braid "
                              f"(s1...s{p - 1})^{q} on free generators, relations g_j = beta(g_j)")
