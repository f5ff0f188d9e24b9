"""Sanity checks for curated presentations."""
from __future__ import annotations

from dataclasses import dataclass

from chisini.monodromy.engine import enumerate_homs
from chisini.monodromy.presentation import FinitePresentation


def relator_matrix(pres: FinitePresentation) -> list[list[int]]:
    """Exponent sums: one row per relator, one column per generator."""
    rows = []
    for w in pres.relators:
        row = [0] * pres.rank
        for x in w:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    return rows


def abelianization(pres: FinitePresentation) -> list[int]:
    """Invariant factors of the abelianization: torsion orders greater than
    one in divisibility order, then a ``0`` for each free summand.  ``Z`` is
    ``[0]``, ``Z/2 + Z`` is ``[2, 0]``, the trivial group ``[]``."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import invariant_factors

    rows = [r for r in relator_matrix(pres) if any(r)]
    if not rows:
        return [0] * pres.rank
    diag = [abs(int(d)) for d in invariant_factors(Matrix(rows), domain=ZZ)]
    nonzero = [d for d in diag if d != 0]
    torsion = sorted(d for d in nonzero if d > 1)
    return torsion + [0] * (pres.rank - len(nonzero))


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def as_dict(self) -> dict:
        return {"check": self.name, "expected": self.expected, "actual": self.actual, "passed": self.passed}


@dataclass(frozen=True)
class ValidationReport:
    presentation: str
    results: tuple

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failed_checks(self) -> list[str]:
        return [r.name for r in self.results if not r.passed]

    def as_dict(self) -> dict:
        return {"presentation": self.presentation, "passed": self.passed,
                "failed": self.failed_checks, "checks": [r.as_dict() for r in self.results]}


def validate_presentation(pres: FinitePresentation, checks: dict | None = None) -> ValidationReport:
    """Compare declared expectations (``pres.expectations`` unless ``checks``
    is given) against computed values."""
    checks = pres.expectations if checks is None else checks
    results = []
    if "abelianization" in checks:
        results.append(CheckResult("abelianization", list(checks["abelianization"]), abelianization(pres)))
    for hc in checks.get("homCounts", []):
        n, ctype = hc["degree"], tuple(hc["type"])
        if n > 4:
            raise ValueError("hom-count checks are limited to degree 4")
        actual = len(enumerate_homs(pres, n, ctype))
        label = f"homCount(degree={n}, type={list(ctype)})"
        results.append(CheckResult(label, hc["count"], actual))
    if "geometricCount" in checks:
        results.append(CheckResult("geometricCount", checks["geometricCount"], len(pres.geometric)))
    return ValidationReport(pres.name, tuple(results))
