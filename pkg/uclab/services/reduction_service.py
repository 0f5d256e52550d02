"""
Reduction service.
The normalized reduction N ↦ N', the child operator, descendent trees,
trivial parents, dependence elimination and size classes.

RULES:
- reduce_normalized only accepts minimal sets; force_reduce skips the check
- every reduction re-checks normalization and the size of new irreducibles
- child adjoins ∅ to families without it (logged)
"""

import enum
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from uclab.core.exceptions import (
    ContractViolationError,
    InputError,
    InvariantBreach,
    NotMinimalError
)
from uclab.models.family import SetFamily
from uclab.models.indexed import IndexedFamily
from uclab.models.reduction import DescendentNode, ReductionStep
from uclab.services.canonical_service import canonical_form, isomorphic
from uclab.services.dual_service import (
    a_of,
    dual,
    dual_indexed,
    index_irreducibles,
    iota
)
from uclab.services.family_service import (
    compact,
    describe,
    irreducibles,
    is_normalized,
    is_independent,
    minimal_sets,
    remove_set,
    require_normalized,
    require_union_closed,
    subtract
)
from uclab.utils.bitmask import MAX_LABEL, bit, is_subset, max_label, popcount

logger = logging.getLogger(__name__)


class Branch(str, enum.Enum):
    FIRST = "first"
    ALL = "all"


class Dedup(str, enum.Enum):
    NONE = "none"
    CANONICAL = "canonical"
    EQUALITY = "equality"


@dataclass(frozen=True)
class ChildResult:
    """A child together with the dual-side data that produced it."""
    family: SetFamily
    step: ReductionStep
    indexed: IndexedFamily
    adjoined_empty: bool = False


# =============================================================================
# NORMALIZED REDUCTION
# =============================================================================

def force_reduce(family: SetFamily, minimal_set: int) -> SetFamily:
    """(N ∖ {M}) ⊖ {a_N} without checking that M is minimal."""
    a = a_of(family)
    return subtract(remove_set(family, minimal_set), bit(a))


def _smaller_member(family: SetFamily, mask: int) -> Optional[int]:
    for other in family.nonempty():
        if other != mask and is_subset(other, mask):
            return other
    return None


def _check_new_irreducibles(family: SetFamily, minimal_set: int, a: int, result: SetFamily) -> None:
    """Irreducibles of N' outside J(N) ⊖ {a} come from members of N larger than M."""
    inherited = {mask & ~bit(a) for mask in irreducibles(family)}
    limit = popcount(minimal_set)
    for mask in irreducibles(result):
        if mask not in inherited and popcount(mask) + 1 <= limit:
            raise InvariantBreach(
                f"new irreducible of size {popcount(mask)} after removing a set of size {limit}",
                family.to_lists()
            )


def reduction_step(family: SetFamily, minimal_set: int) -> ReductionStep:
    """
    One reduction of an n-normalized family by a minimal set.

    Args:
        family: n-normalized N with n ≥ 1
        minimal_set: M, a minimal non-empty member of N

    Returns:
        ReductionStep with result N' = (N ∖ {M}) ⊖ {a_N}

    Raises:
        ContractViolationError: If N is not normalized or is {∅}
        NotMinimalError: If M is not a member, or a smaller member exists
        InvariantBreach: If N' is not (n−1)-normalized
    """
    require_normalized(family, "reduce_normalized")
    if len(family) < 2:
        raise ContractViolationError("reduce_normalized needs n ≥ 1")
    if minimal_set == 0 or minimal_set not in family:
        raise NotMinimalError(minimal_set, None)
    smaller = _smaller_member(family, minimal_set)
    if smaller is not None:
        raise NotMinimalError(minimal_set, smaller)

    a = a_of(family)
    result = subtract(remove_set(family, minimal_set), bit(a))
    if not is_normalized(result) or len(result) != len(family) - 1:
        raise InvariantBreach("reduction did not produce a normalized family", family.to_lists())
    _check_new_irreducibles(family, minimal_set, a, result)
    logger.debug("reduced %s by %s (a=%d)", describe(family), bin(minimal_set), a)
    return ReductionStep(parent=family, minimal_set=minimal_set, a=a, result=result)


def reduce_normalized(family: SetFamily, minimal_set: int) -> SetFamily:
    """N' = (N ∖ {M}) ⊖ {a_N}; see reduction_step."""
    return reduction_step(family, minimal_set).result


# =============================================================================
# CHILD OPERATOR
# =============================================================================

def child_step(
    family: SetFamily,
    minimal_set: Optional[int] = None,
    indexed: Optional[IndexedFamily] = None
) -> ChildResult:
    """
    F↓ = J((F*)')*, keeping the dual-side reduction and the induced indexing.

    Args:
        family: Union-closed family with at least two sets once ∅ is adjoined
        minimal_set: Minimal set of F* to remove; canonical-least when omitted
        indexed: Indexing of F ∖ {∅} used to form F*; canonical when omitted.
            Passing the `indexed` of a previous step iterates the operator
            under induced indexings

    Returns:
        ChildResult; `indexed` lists ι(J((F*)')), the irreducibles of the
        child labelled by the elements of (F*)', so that dual_indexed(indexed)
        reproduces (F*)' exactly

    Raises:
        ContractViolationError: If F is not union-closed or too small, or the
            indexing does not list F ∖ {∅}
        NotMinimalError: If the given set is not minimal in F*
    """
    require_union_closed(family, "child")
    adjoined = False
    if not family.has_empty:
        family = SetFamily(family.sets + (0,))
        adjoined = True
        logger.warning("child: ∅ adjoined to the input family")
    if len(family) < 2:
        raise ContractViolationError("child needs at least two sets")

    dual_family = dual(family, indexed)
    if minimal_set is None:
        minimal_set = minimal_sets(dual_family)[0]
    step = reduction_step(dual_family, minimal_set)

    generators = irreducibles(step.result)
    if generators:
        indexed = iota(index_irreducibles(generators))
        result = dual_indexed(index_irreducibles(generators))
    else:
        indexed = IndexedFamily([])
        result = SetFamily([0])
    return ChildResult(family=result, step=step, indexed=indexed, adjoined_empty=adjoined)


def child(family: SetFamily, minimal_set: Optional[int] = None) -> SetFamily:
    """F↓ for the given (or canonical-least) minimal set of F*."""
    return child_step(family, minimal_set).family


def parity_remark_holds(parent: SetFamily, offspring: SetFamily) -> bool:
    """
    Frankl passes from an independent parent to its child: always when the
    parent has odd size, and strictly when the parent is strict.
    """
    # Import here to avoid circular imports
    from uclab.services.conjecture_service import frankl_check
    from uclab.schemas.conjectures import FranklVerdict

    before = frankl_check(parent)
    after = frankl_check(offspring)
    if before.verdict == FranklVerdict.EXCLUDED or after.verdict == FranklVerdict.EXCLUDED:
        return True
    if len(parent) % 2 == 1 and before.holds:
        return after.holds
    if len(parent) % 2 == 0 and before.verdict == FranklVerdict.STRICT:
        return after.verdict == FranklVerdict.STRICT
    return True


def iter_children(family: SetFamily, branch: Branch = Branch.ALL) -> Iterator[ChildResult]:
    """Children of F for every minimal set of F* (or the canonical-least one)."""
    if not family.has_empty:
        family = SetFamily(family.sets + (0,))
    choices = minimal_sets(dual(family))
    if Branch(branch) == Branch.FIRST:
        choices = choices[:1]
    for minimal_set in choices:
        yield child_step(family, minimal_set)


def diagram_failures(family: SetFamily, depth: int = 3) -> List[Tuple[int, ...]]:
    """
    Check (F↓k)* = (F*)^(k) for k ≤ depth along every path of minimal sets.

    The right-hand side only reduces F* k times. The left-hand side applies
    the child operator k times to F, forming each dual under the indexing
    induced by the step before. The sides must agree exactly, and the
    canonical dual of the k-th child must be isomorphic to (F*)^(k).

    Returns:
        Paths of dual-side minimal sets at whose end the sides differ
    """
    require_union_closed(family, "diagram_failures")
    if not family.has_empty:
        family = SetFamily(family.sets + (0,))
    failures: List[Tuple[int, ...]] = []

    def walk(current: SetFamily, indexed: Optional[IndexedFamily], reduced: SetFamily,
             path: Tuple[int, ...]) -> None:
        if len(path) == depth or len(reduced) < 2:
            return
        for minimal_set in minimal_sets(reduced):
            route = path + (minimal_set,)
            expected = reduce_normalized(reduced, minimal_set)
            try:
                result = child_step(current, minimal_set, indexed)
                commutes = (dual(result.family, result.indexed) == expected
                            and isomorphic(dual(result.family), expected))
            except ContractViolationError as exc:
                logger.debug("diagram path %s: %s", route, exc.message)
                commutes = False
            if not commutes:
                failures.append(route)
                continue
            walk(result.family, result.indexed, expected, route)

    walk(family, None, dual(family), ())
    if failures:
        logger.warning("diagram fails on %d paths for %s", len(failures), describe(family))
    return failures


def dedup_key(family: SetFamily, dedup: Dedup):
    if dedup == Dedup.CANONICAL:
        return canonical_form(family)
    return compact(family)


def descendents(
    family: SetFamily,
    depth: int,
    branch: Branch = Branch.FIRST,
    dedup: Dedup = Dedup.NONE
) -> List[DescendentNode]:
    """
    Breadth-first exploration of F↓k for k ≤ depth.

    Args:
        family: Root; union-closed with ∅ (adjoined when missing)
        depth: Number of child steps, at most |F| − 1
        branch: first = canonical-least minimal set only; all = every choice
        dedup: none, canonical (isomorphism) or equality after compaction

    Returns:
        All nodes level by level, root first
    """
    require_union_closed(family, "descendents")
    if not family.has_empty:
        family = SetFamily(family.sets + (0,))
        logger.warning("descendents: ∅ adjoined to the root family")
    branch, dedup = Branch(branch), Dedup(dedup)
    if depth < 0 or depth > len(family) - 1:
        raise ContractViolationError(f"depth must lie in 0..{len(family) - 1}")

    root = DescendentNode(family=family)
    nodes = [root]
    level = [root]
    for k in range(1, depth + 1):
        seen = set()
        next_level = []
        for node in level:
            check_parity = node.depth > 0 or is_independent(node.family)
            for result in iter_children(node.family, branch):
                if len(result.family) != len(family) - k:
                    raise InvariantBreach("descendent size law violated", node.family.to_lists())
                if check_parity and not parity_remark_holds(node.family, result.family):
                    raise InvariantBreach("Frankl parity remark violated", node.family.to_lists())
                if dedup != Dedup.NONE:
                    key = dedup_key(result.family, dedup)
                    if key in seen:
                        continue
                    seen.add(key)
                next_level.append(DescendentNode(
                    family=result.family,
                    lineage=node.lineage + (result.step,)
                ))
        logger.info("descendents level %d: %d nodes", k, len(next_level))
        nodes.extend(next_level)
        level = next_level
    return nodes


# =============================================================================
# TRIVIAL PARENTS
# =============================================================================

def trivial_parent_normalized(family: SetFamily) -> SetFamily:
    """
    M = {N ∪ {t} : N ∈ N} ∪ {∅} with t = max(U(N)) + 1.

    Raises:
        ContractViolationError: If N is not normalized
        InputError: If t would exceed the universe cap
    """
    require_normalized(family, "trivial_parent_normalized")
    label = max_label(family.span) + 1
    if label > MAX_LABEL:
        raise InputError(f"trivial parent needs label {label} beyond {MAX_LABEL}")
    return SetFamily([mask | bit(label) for mask in family] + [0])


def trivial_parent_independent(family: SetFamily) -> SetFamily:
    """
    T = J(M)* where M is the trivial parent of F*; child(T) ≅ F.

    Raises:
        ContractViolationError: If F is not union-closed with ∅ and independent
    """
    require_union_closed(family, "trivial_parent_independent")
    if not family.has_empty:
        raise ContractViolationError("trivial_parent_independent requires ∅ ∈ F")
    if not is_independent(family):
        raise ContractViolationError("trivial_parent_independent requires an independent family")
    parent = trivial_parent_normalized(dual(family))
    return dual_indexed(index_irreducibles(irreducibles(parent)))


# =============================================================================
# DEPENDENCE AND SIZE CLASSES
# =============================================================================

def eliminate_dependence(family: SetFamily) -> Tuple[SetFamily, List[int]]:
    """
    Subtract dependent elements until the family is independent.

    Returns:
        (independent family, removed elements in removal order)

    Raises:
        InvariantBreach: If a subtraction merges two sets
    """
    # Import here to avoid circular imports
    from uclab.services.axiom_service import find_dependence

    require_union_closed(family, "eliminate_dependence")
    removed = []
    while True:
        found = find_dependence(family)
        if found is None:
            return family, removed
        a, _ = found
        reduced = subtract(family, bit(a))
        if len(reduced) != len(family):
            raise InvariantBreach(f"removing dependent element {a} merged sets", family.to_lists())
        logger.debug("eliminated dependent element %d", a)
        removed.append(a)
        family = reduced


def size_class_decomposition(family: SetFamily) -> List[Tuple[int, int]]:
    """Distinct set sizes λ_i with their multiplicities k_i, increasing."""
    require_normalized(family, "size_class_decomposition")
    counts = Counter(popcount(mask) for mask in family)
    return sorted(counts.items())


def frequency_corollary_check(family: SetFamily) -> bool:
    """Sorted decreasingly, the i-th largest frequency is at least n − i + 1."""
    require_normalized(family, "frequency_corollary_check")
    membership = family.membership()
    frequencies = sorted((popcount(row) for row in membership.values()), reverse=True)
    n = len(frequencies)
    return all(freq >= n - i for i, freq in enumerate(frequencies))


def size_class_corollary_check(family: SetFamily) -> bool:
    """For each class i, at least k_i elements have frequency ≥ n − Σ_{j<i} k_j."""
    classes = size_class_decomposition(family)
    membership = family.membership()
    frequencies = [popcount(row) for row in membership.values()]
    n = len(frequencies)
    removed = 0
    for _, multiplicity in classes:
        threshold = n - removed
        if threshold > 0 and sum(1 for f in frequencies if f >= threshold) < multiplicity:
            return False
        removed += multiplicity
    return True
