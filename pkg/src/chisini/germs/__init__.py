from chisini.germs.germ import (
    CurveGerm,
    GermError,
    GermInvariants,
    branch_count,
    branches,
    delta_invariant,
    invariants,
    milnor_number,
    multiplicity,
    recognize_type,
    virtual_cusps,
    virtual_nodes,
)
from chisini.germs.milnor import NonIsolatedSingularity, local_algebra_milnor, resultant_milnor
from chisini.germs.puiseux import PuiseuxBranch
from chisini.germs.types import TypeTag, parse_tag

__all__ = [
    "CurveGerm", "GermError", "GermInvariants", "NonIsolatedSingularity", "PuiseuxBranch",
    "TypeTag", "branch_count", "branches", "delta_invariant", "invariants",
    "local_algebra_milnor", "milnor_number", "multiplicity", "parse_tag", "recognize_type",
    "resultant_milnor", "virtual_cusps", "virtual_nodes",
]
