"""Regenerate the shipped presentation files.

Hom-count expectations come from the exhaustive oracle, not from the
backtracking engine, so the files double as independent golden data.
"""
import json
import sys
from pathlib import Path

from chisini.monodromy.engine import brute_force_homs
from chisini.monodromy.presentation import ak_presentation, free_presentation, torus_germ_presentation
from chisini.monodromy.validate import abelianization

OUT = Path(__file__).resolve().parent.parent / "src" / "chisini" / "data" / "presentations"


def with_expectations(pres, max_degree=4):
    doc = pres.to_json()
    counts = []
    for n in range(2, max_degree + 1):
        counts.append({"degree": n, "type": [2], "count": len(brute_force_homs(pres, n, (2,)))})
    doc["expectations"] = {"abelianization": abelianization(pres), "homCounts": counts,
                           "geometricCount": len(pres.geometric)}
    return doc


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    pack = {"free_rank1": free_presentation(1)}
    for k in range(1, 9):
        pack[f"A{k}"] = ak_presentation(k)
    e6 = torus_germ_presentation(3, 4)
    pack["E6"] = e6.__class__(e6.generators, e6.relators, e6.geometric, "E6", e6.provenance)
    pack["torus_4_5"] = torus_germ_presentation(4, 5)
    pack["torus_3_8"] = torus_germ_presentation(3, 8)
    for stem, pres in pack.items():
        doc = with_expectations(pres)
        (OUT / f"{stem}.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        print(stem, doc["expectations"], file=sys.stderr)


if __name__ == "__main__":
    main()
