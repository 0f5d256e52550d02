"""
Enumeration service.
Exhaustive generators for union-closed and normalized families on [n], an
independent brute-force generator, random supratopologies, and the oracle
runs that cross-check every optimized routine on whole censuses.

GENERATION:
- union-closed families are grown by reverse search: the parent of a family
  removes its least irreducible other than [n], so each family is reached once
- normalized families are built from a union-closed family T on [n] ∖ {a}
  with n sets: N = {∅} ∪ {S ∪ {a} : S ∈ T}, kept when separating
"""

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from math import factorial
from typing import Callable, Iterable, Iterator, List, Optional, Set, Tuple

from uclab.core.config import get_settings
from uclab.core.exceptions import (
    ChainFailure,
    GuardExceededError,
    InputError,
    InvariantBreach
)
from uclab.models.family import SetFamily
from uclab.schemas.axioms import AxiomId
from uclab.schemas.conjectures import PoonenOutcome
from uclab.schemas.enumeration import (
    Constraint,
    CrosscheckReport,
    DescpowerReport,
    Discrepancy,
    EnumSpec,
    StaircaseReport
)
from uclab.services.axiom_service import axiom_profile, check_axiom, replay_witness, verify_hasse
from uclab.services.canonical_service import automorphism_count, canonical_form, isomorphic
from uclab.services.conjecture_service import (
    frankl_check,
    generalized_chain,
    is_excluded,
    poonen_sharp_check,
    salzborn_check,
    salzborn_transfer_check,
    tff_size_bound_holds,
    verify_chain
)
from uclab.services.dual_service import (
    double_dual_irreducibles,
    dual,
    dual_indexed,
    dual_size_matches,
    index_canonically,
    iota
)
from uclab.services.family_service import (
    close_under_union,
    irreducibles,
    is_independent,
    is_normalized,
    is_separating,
    is_supratopology,
    is_union_closed,
    max_frequency,
    minimal_sets,
    power_set,
    staircase
)
from uclab.services.reduction_service import (
    Branch,
    Dedup,
    dedup_key,
    diagram_failures,
    eliminate_dependence,
    frequency_corollary_check,
    iter_children,
    parity_remark_holds,
    reduction_step,
    size_class_corollary_check
)
from uclab.utils.bitmask import bit, format_set, full_mask, is_subset, iter_labels, set_key

logger = logging.getLogger(__name__)
settings = get_settings()


# =============================================================================
# UNION-CLOSED GENERATION
# =============================================================================

def _irreducible_in(members: Set[int], mask: int) -> bool:
    below = 0
    for other in members:
        if other != mask and is_subset(other, mask):
            below |= other
    return below != mask


def _anchor(members: Set[int], full: int) -> Optional[int]:
    """Least irreducible other than the full set; None for {[n]}."""
    candidates = [m for m in members if m != full and _irreducible_in(members, m)]
    return min(candidates, key=set_key) if candidates else None


def iter_union_closed_nonempty(n: int, max_sets: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """
    Every union-closed family of non-empty subsets of [n] with union [n].

    Args:
        n: Universe size, at least 1
        max_sets: Do not grow families beyond this many sets

    Yields:
        Member masks in canonical order
    """
    if n < 1:
        return
    full = full_mask(n)
    candidates = sorted(range(1, full), key=set_key)
    stack = [frozenset({full})]
    while stack:
        members = stack.pop()
        yield tuple(sorted(members, key=set_key))
        if max_sets is not None and len(members) >= max_sets:
            continue
        anchor = _anchor(set(members), full)
        children = []
        for mask in candidates:
            if anchor is not None and set_key(mask) >= set_key(anchor):
                break
            if mask in members:
                continue
            if any((mask | other) not in members and (mask | other) != mask for other in members):
                continue
            if not _irreducible_in(set(members), mask):
                continue
            children.append(members | {mask})
        stack.extend(reversed(children))


def _satisfies(family: SetFamily, n: int, constraints: Iterable[Constraint]) -> bool:
    for constraint in constraints:
        if constraint == Constraint.CONTAINS_EMPTY and not family.has_empty:
            return False
        if constraint == Constraint.CONTAINS_UNIVERSE and full_mask(n) not in family:
            return False
        if constraint == Constraint.SEPARATING and not is_separating(family):
            return False
        if constraint == Constraint.NORMALIZED and not is_normalized(family):
            return False
        if constraint == Constraint.INDEPENDENT and not is_independent(family):
            return False
    return True


def _union_closed(n: int) -> Iterator[SetFamily]:
    if n == 0:
        yield SetFamily()
        yield SetFamily([0])
        return
    for members in iter_union_closed_nonempty(n):
        yield SetFamily(members)
        yield SetFamily(members + (0,))


def _normalized(n: int, up_to_iso: bool) -> Iterator[SetFamily]:
    if n == 0:
        yield SetFamily([0])
        return
    choices = [n] if up_to_iso else list(range(1, n + 1))
    for a in choices:
        others = [label for label in range(1, n + 1) if label != a]

        def embed(mask: int) -> int:
            result = bit(a)
            for rank in iter_labels(mask):
                result |= bit(others[rank - 1])
            return result

        if n == 1:
            yield SetFamily([0, bit(a)])
            continue
        for members in iter_union_closed_nonempty(n - 1, max_sets=n):
            if len(members) == n:
                family = SetFamily([0] + [embed(m) for m in members])
            elif len(members) == n - 1:
                family = SetFamily([0, bit(a)] + [embed(m) for m in members])
            else:
                continue
            if is_normalized(family):
                yield family


def enumerate_families(spec: EnumSpec) -> Iterator[SetFamily]:
    """
    Stream every family over [n] meeting the constraints.

    Without the normalized constraint the stream covers the union-closed
    families with U(F) = [n]; with it, the normalized families on [n].

    Args:
        spec: EnumSpec(n, constraints, up_to_iso)

    Yields:
        Each family once, or one representative per isomorphism class

    Raises:
        GuardExceededError: If n exceeds the configured enumeration limit
    """
    n = spec.n
    normalized = Constraint.NORMALIZED in spec.constraints
    limit = settings.ENUM_NORMALIZED_MAX if normalized else settings.ENUM_UNION_CLOSED_MAX
    if n > limit:
        raise GuardExceededError("n", n, limit)

    stream = _normalized(n, spec.up_to_iso) if normalized else _union_closed(n)
    seen = set()
    emitted = 0
    for family in stream:
        if not _satisfies(family, n, spec.constraints):
            continue
        if spec.up_to_iso:
            key = canonical_form(family)
            if key in seen:
                continue
            seen.add(key)
        emitted += 1
        yield family
    logger.info("enumerated %d families for n=%d", emitted, n)


def naive_enumerate(n: int, constraints: Iterable[Constraint] = ()) -> Iterator[SetFamily]:
    """
    Brute-force census: every collection of subsets of [n] that is
    union-closed with union [n], filtered by the constraints.

    Raises:
        GuardExceededError: If n exceeds NAIVE_ENUM_MAX
    """
    if n < 0:
        raise InputError("n must be non-negative")
    if n > settings.NAIVE_ENUM_MAX:
        raise GuardExceededError("n", n, settings.NAIVE_ENUM_MAX)
    constraints = list(constraints)
    full = full_mask(n)
    subsets = range(1 << n)
    for code in range(1 << (1 << n)):
        family = SetFamily(s for s in subsets if code >> s & 1)
        if family.span != full or not is_union_closed(family):
            continue
        if _satisfies(family, n, constraints):
            yield family


def orbit_total(n: int, constraints: Iterable[Constraint] = ()) -> int:
    """Σ n!/|Aut(F)| over the isomorphism classes; equals the full census size."""
    spec = EnumSpec(n=n, constraints=set(constraints), up_to_iso=True)
    return sum(factorial(n) // automorphism_count(f) for f in enumerate_families(spec))


def random_supratopology(n: int, rng: random.Random, density: float = 0.3) -> SetFamily:
    """
    Union-closure of randomly chosen subsets of [n], with ∅ and [n] added.

    Raises:
        InputError: If n is outside 1..20
    """
    if n < 1 or n > settings.POWER_SET_MAX:
        raise InputError(f"n={n} must lie in 1..{settings.POWER_SET_MAX}")
    full = full_mask(n)
    generators = [mask for mask in range(1, full) if rng.random() < density]
    closed = close_under_union(generators)
    return SetFamily(closed.sets + (full,))


# =============================================================================
# ORACLE CROSS-CHECK
# =============================================================================

def _parallel_map(fn: Callable, items: Iterable) -> Iterator:
    if settings.WORKERS > 1:
        with ProcessPoolExecutor(max_workers=settings.WORKERS) as pool:
            yield from pool.map(fn, items, chunksize=16)
    else:
        yield from map(fn, items)


def _chain_checks(family: SetFamily, report: Callable[..., None]) -> None:
    """Poonen and chain checks on a union-closed family other than ∅ and {∅}."""
    if poonen_sharp_check(family) == PoonenOutcome.SHARP_NOT_POWERSET:
        report("poonen-sharp")
    try:
        if not verify_chain(family, generalized_chain(family)):
            report("chain")
    except ChainFailure as exc:
        report("chain", exc.message)


def sweep_family(family: SetFamily) -> List[Discrepancy]:
    """
    Conjecture checks that apply to any union-closed family.

    T_FF ⇒ Frankl is only asked of supratopologies; the Poonen and chain
    checks run on every family other than ∅ and {∅}, with or without ∅.
    """
    found: List[Discrepancy] = []

    def report(check: str, detail: str = "") -> None:
        logger.error("sweep %s failed on %s %s", check, family, detail)
        found.append(Discrepancy(check=check, family=family.to_lists(), detail=detail))

    if is_excluded(family):
        return found
    if is_supratopology(family) and check_axiom(family, AxiomId.TFF).holds:
        if not frankl_check(family).holds:
            report("tff-frankl")
    _chain_checks(family, report)
    return found


def union_closed_sweep(n: int) -> CrosscheckReport:
    """
    Run sweep_family on every union-closed family F with U(F) = [n].

    Raises:
        GuardExceededError: If n exceeds NAIVE_ENUM_MAX
    """
    if n < 0:
        raise InputError("n must be non-negative")
    if n > settings.NAIVE_ENUM_MAX:
        raise GuardExceededError("n", n, settings.NAIVE_ENUM_MAX)
    report = CrosscheckReport(n=n)
    for found in _parallel_map(sweep_family, enumerate_families(EnumSpec(n=n))):
        report.families_checked += 1
        report.discrepancies.extend(found)
    logger.info("union-closed sweep n=%d: %d families, %d discrepancies",
                n, report.families_checked, len(report.discrepancies))
    return report


def crosscheck_family(family: SetFamily) -> Tuple[List[Discrepancy], bool, bool]:
    """
    Run every oracle on one supratopology.

    Returns:
        (discrepancies, is normalized, is independent)
    """
    found: List[Discrepancy] = []

    def report(check: str, detail: str = "") -> None:
        logger.error("crosscheck %s failed on %s %s", check, family, detail)
        found.append(Discrepancy(check=check, family=family.to_lists(), detail=detail))

    fast = axiom_profile(family)
    naive = axiom_profile(family, naive=True)
    for verdict in fast.verdicts:
        if verdict.holds != naive.holds(verdict.axiom):
            report(f"axiom:{verdict.axiom.value}", f"fast={verdict.holds}")
        elif not verdict.holds and not replay_witness(family, verdict):
            report(f"witness:{verdict.axiom.value}", str(verdict.witness))
    for violation in verify_hasse([family], [fast]):
        report("hasse", f"=> {violation.conclusion.value}")

    try:
        is_separating(family)
    except InvariantBreach as exc:
        report("separating", exc.message)
    if not dual_size_matches(family):
        report("dual-size")
    if not is_normalized(dual(family)):
        report("dual-normalized")

    frankl = frankl_check(family)
    if fast.holds(AxiomId.TFF) and not frankl.holds:
        report("tff-frankl")
    if not tff_size_bound_holds(family):
        report("tff-size")
    if not is_excluded(family):
        _chain_checks(family, report)
        reduced, _ = eliminate_dependence(family)
        if frankl_check(reduced).holds and not frankl.holds:
            report("dependence-frankl")
        if max_frequency(reduced)[1] > frankl.freq:
            report("dependence-frequency")

    normalized = is_normalized(family)
    if normalized:
        for minimal_set in minimal_sets(family):
            try:
                reduction_step(family, minimal_set)
            except InvariantBreach as exc:
                report("reduction", exc.message)
        if not frequency_corollary_check(family):
            report("frequency-corollary")
        if not size_class_corollary_check(family):
            report("size-class-corollary")
        try:
            if double_dual_irreducibles(family) != family:
                report("double-dual")
        except InvariantBreach as exc:
            report("double-dual", exc.message)

    independent = is_independent(family)
    if independent and len(family) >= 2:
        images = iota(index_canonically(family))
        dual_family = dual(family)
        if set(images.items) != set(irreducibles(dual_family)):
            report("dual-irreducibles")
        if dual_indexed(images) != family:
            report("irreducibles-dual")
        if not salzborn_transfer_check(family):
            report("salzborn-transfer")
        for path in diagram_failures(family, depth=3):
            report("diagram", " ".join(format_set(mask) for mask in path))
        if normalized and not isomorphic(family, staircase(len(family) - 1)):
            report("staircase")
    return found, normalized, independent


def oracle_crosscheck(n: int, rng: Optional[random.Random] = None) -> CrosscheckReport:
    """
    Cross-check the optimized routines on every supratopology on [n].

    n ≤ NAIVE_ENUM_MAX runs exhaustively, compares the census against the
    brute-force generator and adds union_closed_sweep over every
    union-closed family on [n]; n = 5 draws SAMPLE_SIZE random
    supratopologies.

    Raises:
        GuardExceededError: If n > 5
    """
    if n < 0:
        raise InputError("n must be non-negative")
    if n > settings.ENUM_UNION_CLOSED_MAX:
        raise GuardExceededError("n", n, settings.ENUM_UNION_CLOSED_MAX)
    report = CrosscheckReport(n=n)
    constraints = {Constraint.CONTAINS_EMPTY, Constraint.CONTAINS_UNIVERSE}
    if n <= settings.NAIVE_ENUM_MAX:
        families = list(enumerate_families(EnumSpec(n=n, constraints=constraints)))
        naive = {f for f in naive_enumerate(n, constraints)}
        if naive != set(families) or len(naive) != len(families):
            report.discrepancies.append(Discrepancy(
                check="census",
                family=[],
                detail=f"generator={len(families)} naive={len(naive)}"
            ))
        sweep = union_closed_sweep(n)
        report.union_closed_checked = sweep.families_checked
        report.discrepancies.extend(sweep.discrepancies)
    else:
        rng = rng or random.Random(settings.RANDOM_SEED)
        families = [random_supratopology(n, rng) for _ in range(settings.SAMPLE_SIZE)]
        report.sampled = True

    for found, normalized, independent in _parallel_map(crosscheck_family, families):
        report.families_checked += 1
        report.normalized_checked += normalized
        report.independent_checked += independent
        report.discrepancies.extend(found)
    logger.info("crosscheck n=%d: %d families, %d discrepancies",
                n, report.families_checked, len(report.discrepancies))
    return report


# =============================================================================
# DESCENDENTS OF POWER SETS AND STAIRCASES
# =============================================================================

def verify_descpower(n: int, dedup: Dedup = Dedup.CANONICAL) -> DescpowerReport:
    """
    Explore every descendent of P([n]) over all minimal-set choices.

    Each node is checked for Frankl, its dual for Salzborn, and each
    parent/child pair for the parity remark.

    Raises:
        GuardExceededError: If n exceeds DESCPOWER_MAX
    """
    if n < 1:
        raise InputError("verify_descpower needs n ≥ 1")
    if n > settings.DESCPOWER_MAX:
        raise GuardExceededError("n", n, settings.DESCPOWER_MAX)
    dedup = Dedup(dedup)
    report = DescpowerReport(n=n, dedup=dedup.value)

    def check(family: SetFamily) -> None:
        report.nodes += 1
        if not frankl_check(family).holds:
            report.frankl_failures.append(family.to_lists())
        if not salzborn_check(dual(family)).holds:
            report.salzborn_failures.append(family.to_lists())

    root = power_set(n)
    check(root)
    report.levels.append(1)
    level = [root]
    while level and len(level[0]) >= 2:
        seen = set()
        next_level = []
        for parent in level:
            for result in iter_children(parent, Branch.ALL):
                offspring = result.family
                if dedup != Dedup.NONE:
                    key = dedup_key(offspring, dedup)
                    if key in seen:
                        continue
                    seen.add(key)
                if not parity_remark_holds(parent, offspring):
                    report.parity_failures.append(parent.to_lists())
                check(offspring)
                next_level.append(offspring)
        report.levels.append(len(next_level))
        level = next_level
    logger.info("descendents of P([%d]): %d nodes over %d levels",
                n, report.nodes, len(report.levels))
    return report


def staircase_uniqueness(n_max: int) -> List[StaircaseReport]:
    """
    For each n ≤ n_max, the normalized classes on [n] that are independent.

    Raises:
        GuardExceededError: If n_max exceeds ENUM_NORMALIZED_MAX
    """
    if n_max > settings.ENUM_NORMALIZED_MAX:
        raise GuardExceededError("n", n_max, settings.ENUM_NORMALIZED_MAX)
    reports = []
    for n in range(1, n_max + 1):
        spec = EnumSpec(n=n, constraints={Constraint.NORMALIZED}, up_to_iso=True)
        classes = list(enumerate_families(spec))
        independent = [f for f in classes if is_independent(f)]
        reports.append(StaircaseReport(
            n=n,
            classes=len(classes),
            independent=len(independent),
            independent_is_staircase=(
                len(independent) == 1 and isomorphic(independent[0], staircase(n))
            )
        ))
    return reports
