# Services module initialization

from uclab.services.family_service import (
    make_family,
    close_under_union,
    irreducibles,
    minimal_sets,
    restrict,
    subtract,
    topo,
    point_ops,
    frequency,
    max_frequency,
    predicates,
    staircase,
    power_set,
    binom_at_least
)
from uclab.services.canonical_service import canonical_form, isomorphic
from uclab.services.axiom_service import (
    weakly_separated,
    check_axiom,
    check_axiom_naive,
    axiom_profile,
    verify_hasse
)
from uclab.services.dual_service import (
    index_canonically,
    iota,
    iota_subset,
    dual,
    a_of,
    double_dual_irreducibles
)
from uclab.services.reduction_service import (
    reduce_normalized,
    child,
    descendents,
    diagram_failures,
    trivial_parent_normalized,
    trivial_parent_independent,
    eliminate_dependence,
    size_class_decomposition
)
from uclab.services.conjecture_service import (
    frankl_check,
    salzborn_check,
    salzborn_transfer_check,
    generalized_chain,
    poonen_sharp_check,
    problematic_sets,
    binomial_lemma_check
)
from uclab.services.enumeration_service import (
    enumerate_families,
    verify_descpower,
    oracle_crosscheck,
    union_closed_sweep
)
from uclab.services.io_service import parse_family, serialize_family

__all__ = [
    # Family
    "make_family",
    "close_under_union",
    "irreducibles",
    "minimal_sets",
    "restrict",
    "subtract",
    "topo",
    "point_ops",
    "frequency",
    "max_frequency",
    "predicates",
    "staircase",
    "power_set",
    "binom_at_least",
    # Canonical
    "canonical_form",
    "isomorphic",
    # Axioms
    "weakly_separated",
    "check_axiom",
    "check_axiom_naive",
    "axiom_profile",
    "verify_hasse",
    # Dual
    "index_canonically",
    "iota",
    "iota_subset",
    "dual",
    "a_of",
    "double_dual_irreducibles",
    # Reduction
    "reduce_normalized",
    "child",
    "descendents",
    "diagram_failures",
    "trivial_parent_normalized",
    "trivial_parent_independent",
    "eliminate_dependence",
    "size_class_decomposition",
    # Conjectures
    "frankl_check",
    "salzborn_check",
    "salzborn_transfer_check",
    "generalized_chain",
    "poonen_sharp_check",
    "problematic_sets",
    "binomial_lemma_check",
    # Enumeration
    "enumerate_families",
    "verify_descpower",
    "oracle_crosscheck",
    "union_closed_sweep",
    # I/O
    "parse_family",
    "serialize_family"
]
