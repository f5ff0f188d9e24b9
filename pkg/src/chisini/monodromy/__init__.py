from chisini.monodromy.engine import (
    ComponentDecomposition,
    DegreeCapExceeded,
    EquivalenceClass,
    PermRepresentation,
    brute_force_homs,
    components,
    equivalence_classes,
    enumerate_homs,
    is_transitive,
)
from chisini.monodromy.perm import Permutation, cyclical_type
from chisini.monodromy.presentation import (
    FinitePresentation,
    SchemaError,
    ak_presentation,
    data_dir,
    data_pack,
    find_presentation,
    free_presentation,
    load_presentation,
    presentation_from_json,
    torus_germ_presentation,
)
from chisini.monodromy.validate import ValidationReport, abelianization, validate_presentation

__all__ = [
    "ComponentDecomposition", "DegreeCapExceeded", "EquivalenceClass", "FinitePresentation", "Permutation",
    "PermRepresentation", "SchemaError", "ValidationReport", "abelianization", "ak_presentation",
    "brute_force_homs", "components", "cyclical_type", "data_dir", "data_pack", "enumerate_homs",
    "equivalence_classes", "find_presentation", "free_presentation", "is_transitive", "load_presentation",
    "presentation_from_json", "torus_germ_presentation", "validate_presentation",
]
