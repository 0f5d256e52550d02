"""
Regression suite of worked examples.
Each item rebuilds a published example or sweep from scratch and compares it
with the stated values. Items are addressable by name.
"""

import logging
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from uclab.core.exceptions import InputError, NotMinimalError, UCLabError
from uclab.models.family import SetFamily
from uclab.models.indexed import IndexedFamily
from uclab.schemas.axioms import AxiomId
from uclab.schemas.enumeration import Constraint, EnumSpec
from uclab.schemas.report import SuiteItemResult
from uclab.services.axiom_service import axiom_profile, discover_relations, verify_hasse
from uclab.services.conjecture_service import (
    binomial_lemma_check,
    frankl_check,
    generalized_chain,
    power_set_dual_profile,
    salzborn_check
)
from uclab.services.dual_service import (
    a_of,
    double_dual_irreducibles,
    dual,
    index_canonically,
    iota
)
from uclab.services.enumeration_service import (
    enumerate_families,
    staircase_uniqueness,
    verify_descpower
)
from uclab.services.family_service import (
    binom_at_least,
    close_under_union,
    irreducibles,
    is_separating,
    make_family,
    max_frequency,
    power_set,
    staircase
)
from uclab.services.reduction_service import (
    Dedup,
    child_step,
    force_reduce,
    reduce_normalized,
    size_class_decomposition
)
from uclab.utils.bitmask import elements_of, mask_of

logger = logging.getLogger(__name__)

Outcome = Tuple[bool, str, List[str]]


def _masks(sets: Sequence[Sequence[int]]) -> List[int]:
    return [mask_of(labels) for labels in sets]


# P([3]) without {1}
P3M1 = make_family([[], [2], [3], [1, 2], [1, 3], [2, 3], [1, 2, 3]])
P3M1_DUAL = make_family([
    [], [3, 4, 6], [1, 3, 5, 6], [2, 4, 5, 6],
    [1, 3, 4, 5, 6], [2, 3, 4, 5, 6], [1, 2, 3, 4, 5, 6]
])
P3M1_REDUCED = make_family([[], [1, 3, 5], [2, 4, 5], [1, 3, 4, 5], [2, 3, 4, 5], [1, 2, 3, 4, 5]])
P3M1_CHILD = make_family([[], [1, 3], [2, 4], [1, 3, 4], [2, 3, 4], [1, 2, 3, 4]])

# normalized family on [7] generated by three irreducibles
SEVEN = make_family([
    [], [1, 4, 6, 7], [2, 5, 6, 7], [3, 4, 5, 6],
    [1, 2, 4, 5, 6, 7], [1, 3, 4, 5, 6, 7], [2, 3, 4, 5, 6, 7], [1, 2, 3, 4, 5, 6, 7]
])
SEVEN_IRREDUCIBLES = [[1, 4, 6, 7], [2, 5, 6, 7], [3, 4, 5, 6]]
SEVEN_IOTA = [[1], [2], [3], [1, 3], [2, 3], [1, 2, 3], [1, 2]]

# removal of a non-minimal set
REMOVAL = make_family([
    [], [5, 7], [3, 6, 7], [3, 5, 6, 7], [2, 4, 5, 6, 7],
    [1, 3, 4, 5, 6, 7], [2, 3, 4, 5, 6, 7], [1, 2, 3, 4, 5, 6, 7]
])
REMOVAL_FORCED = make_family([[], [5], [3, 6], [3, 5, 6], [2, 4, 5, 6], [2, 3, 4, 5, 6], [1, 2, 3, 4, 5, 6]])

# (name, family, holding axiom, failing axiom, notes)
AXIOM_EXAMPLES = [
    ("axioms-t1-nondiscrete", binom_at_least(4, 2), AxiomId.T1, AxiomId.TFF, []),
    ("axioms-tid-not-tud", close_under_union(_masks([[1, 2], [3, 4]])), AxiomId.TiD, AxiomId.TUD, []),
    ("axioms-five-point-not-t0", make_family([[], [1, 2, 3], [1, 4, 5], [1, 2, 3, 4, 5]]), None, AxiomId.T0,
     ["also fails TUD: shadow(2) = {3} is not closed, and TUD implies T0"]),
    ("axioms-tdd-not-tf", make_family([[], [1, 2], [2, 3], [1, 2, 3], [1, 2, 4], [1, 3, 4], [1, 2, 3, 4]]),
     AxiomId.TDD, AxiomId.TF, []),
    ("axioms-tys-not-ti", make_family([[], [1, 2], [1, 3], [1, 2, 3]]), AxiomId.TYS, AxiomId.TI, []),
    ("axioms-tud-not-td", make_family([[], [1, 3], [1, 2], [1, 2, 3]]), AxiomId.TUD, AxiomId.TD, []),
    ("axioms-tid-not-t0", make_family([[], [1, 2]]), AxiomId.TiD, AxiomId.T0, []),
    ("axioms-t1-not-tff", binom_at_least(4, 3), AxiomId.T1, AxiomId.TFF, []),
    ("axioms-td-not-t1", staircase(3), AxiomId.TD, AxiomId.T1, []),
]


# =============================================================================
# ITEMS
# =============================================================================

def _punctured_cube_dual() -> Outcome:
    indexed = index_canonically(P3M1)
    images = iota(indexed)
    checks = [
        indexed.items == tuple(_masks([[2], [3], [1, 2], [1, 3], [2, 3], [1, 2, 3]])),
        images.items == tuple(_masks([[3, 4, 6], [1, 3, 5, 6], [2, 4, 5, 6]])),
        iota(images) == indexed,
        dual(P3M1) == P3M1_DUAL,
        a_of(P3M1_DUAL) == 6,
        max_frequency(P3M1) == (2, 4),
        size_class_decomposition(P3M1_DUAL) == [(0, 1), (3, 1), (4, 2), (5, 2), (6, 1)],
        salzborn_check(P3M1_DUAL).witness == [1, 3, 5, 6],
        generalized_chain(P3M1).counts == [4, 2, 1],
    ]
    return all(checks), f"{sum(checks)}/{len(checks)} values match", []


def _irreducible_double_dual() -> Outcome:
    given_order = IndexedFamily(_masks(SEVEN_IRREDUCIBLES))
    images = iota(given_order)
    checks = [
        set(irreducibles(SEVEN)) == set(_masks(SEVEN_IRREDUCIBLES)),
        [elements_of(m) for m in images.items] == SEVEN_IOTA,
        close_under_union(images.items) == power_set(3),
        double_dual_irreducibles(SEVEN) == SEVEN,
        a_of(SEVEN) == 6,
    ]
    return all(checks), f"{sum(checks)}/{len(checks)} values match", []


def _child_example() -> Outcome:
    result = child_step(P3M1)
    checks = [
        result.step.minimal_set == mask_of([3, 4, 6]),
        result.step.result == P3M1_REDUCED,
        irreducibles(P3M1_REDUCED) == _masks([[1, 3, 5], [2, 4, 5], [1, 3, 4, 5], [2, 3, 4, 5]]),
        result.family == P3M1_CHILD,
        reduce_normalized(P3M1_DUAL, mask_of([3, 4, 6])) == P3M1_REDUCED,
    ]
    return all(checks), f"{sum(checks)}/{len(checks)} values match", []


def _removal_counterexample() -> Outcome:
    removed = mask_of([1, 3, 4, 5, 6, 7])
    try:
        reduce_normalized(REMOVAL, removed)
        rejected = False
    except NotMinimalError as exc:
        rejected = exc.witness == mask_of([5, 7])
    forced = force_reduce(REMOVAL, removed)
    rows = forced.membership()
    checks = [rejected, forced == REMOVAL_FORCED, not is_separating(forced), rows[2] == rows[4]]
    return all(checks), "2 and 4 lie in the same sets after forcing", []


def _axiom_item(family: SetFamily, holding: Optional[AxiomId], failing: AxiomId) -> Callable[[], Outcome]:
    def run() -> Outcome:
        profile = axiom_profile(family)
        ok = not profile.holds(failing) and (holding is None or profile.holds(holding))
        holding_text = f"{holding.value} holds, " if holding is not None else ""
        return ok, f"{holding_text}{failing.value} fails", []
    return run


def _binomial_sweep() -> Outcome:
    anchors = [
        (2 ** 3 - 1, comb(6, 0) + comb(6, 1)) == (7, 7),
        (2 ** 4 - 1, comb(6, 0) + comb(6, 1) + comb(6, 2)) == (15, 22),
    ]
    swept = binomial_lemma_check(6, 30)
    return swept and all(anchors), "6 ≤ n ≤ 30, anchors 7 ≤ 7 and 15 ≤ 22", []


def _descpower3() -> Outcome:
    report = verify_descpower(3, Dedup.CANONICAL)
    return report.passed, f"{report.nodes} nodes, levels {report.levels}", []


def _staircase_uniqueness() -> Outcome:
    reports = staircase_uniqueness(5)
    ok = all(r.independent == 1 and r.independent_is_staircase for r in reports)
    return ok, ", ".join(f"n={r.n}: {r.classes} classes" for r in reports), []


def _hasse_census() -> Outcome:
    families = []
    for n in range(0, 4):
        spec = EnumSpec(n=n, constraints={Constraint.CONTAINS_EMPTY, Constraint.CONTAINS_UNIVERSE})
        families.extend(enumerate_families(spec))
    profiles = [axiom_profile(f) for f in families]
    violations = verify_hasse(families, profiles)
    extra = [
        f"{r.premise.value} => {r.conclusion.value} (support {r.support})"
        for r in discover_relations(profiles)
    ]
    return not violations, f"{len(families)} families, {len(violations)} violations", extra


def _power_set_duals() -> Outcome:
    profiles = [power_set_dual_profile(n) for n in (3, 4, 5)]
    return all(p.matches for p in profiles), "n = 3, 4, 5", []


def _power_set_frankl() -> Outcome:
    verdicts = [frankl_check(power_set(n)).verdict.value for n in (1, 2, 3)]
    return verdicts == ["sharp"] * 3, "P([n]) is sharp", []


CATALOGUE: Dict[str, Callable[[], Outcome]] = {
    "punctured-cube-dual": _punctured_cube_dual,
    "irreducible-double-dual": _irreducible_double_dual,
    "child-example": _child_example,
    "removal-counterexample": _removal_counterexample,
    **{name: _axiom_item(family, holding, failing) for name, family, holding, failing, _ in AXIOM_EXAMPLES},
    "binomial-sweep": _binomial_sweep,
    "power-set-duals": _power_set_duals,
    "power-set-frankl": _power_set_frankl,
    "descpower-3": _descpower3,
    "staircase-uniqueness": _staircase_uniqueness,
    "hasse-census": _hasse_census,
}

_NOTES = {name: notes for name, _, _, _, notes in AXIOM_EXAMPLES}


def run_suite(name_filter: Optional[str] = None) -> List[SuiteItemResult]:
    """
    Run the catalogue, or the items whose name contains the filter.

    Raises:
        InputError: If the filter matches no item
    """
    names = [name for name in CATALOGUE if name_filter is None or name_filter in name]
    if not names:
        raise InputError(f"no suite item matches {name_filter!r}")
    results = []
    for name in names:
        try:
            passed, detail, notes = CATALOGUE[name]()
        except UCLabError as exc:
            passed, detail, notes = False, f"{type(exc).__name__}: {exc.message}", []
        if not passed:
            logger.error("suite item %s failed: %s", name, detail)
        results.append(SuiteItemResult(
            name=name,
            passed=passed,
            detail=detail,
            notes=_NOTES.get(name, []) + notes
        ))
    return results
