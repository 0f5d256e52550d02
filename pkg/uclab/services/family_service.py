"""
Family service: construction, closure, irreducibles, restriction and
subtraction, topological point operators, frequencies and predicates.

CONVENTIONS:
- Sets are bitmasks, element k at bit k-1
- Families are immutable SetFamily values kept in (cardinality, mask) order
- Topological operators read the family as a supratopology on X = universe
"""

import enum
import logging
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

from uclab.core.config import get_settings
from uclab.core.exceptions import (
    ContractViolationError,
    GuardExceededError,
    InputError,
    InvariantBreach
)
from uclab.models.family import SetFamily
from uclab.schemas.family import FamilyPredicates
from uclab.utils.bitmask import (
    MAX_LABEL,
    bit,
    elements_of,
    format_set,
    full_mask,
    is_subset,
    iter_labels,
    mask_of,
    popcount,
)

logger = logging.getLogger(__name__)
settings = get_settings()


class RestrictMode(str, enum.Enum):
    MEETS = "meets"
    AVOIDS = "avoids"


class TopoOp(str, enum.Enum):
    INTERIOR = "interior"
    CLOSURE = "closure"


class PointOp(str, enum.Enum):
    BAR = "bar"
    SHADOW = "shadow"
    KERNEL = "kernel"
    SHELL = "shell"
    U_TILDE = "u_tilde"


# =============================================================================
# CONSTRUCTION
# =============================================================================

def family_from_masks(masks: Iterable[int], universe: Optional[int] = None) -> SetFamily:
    """
    Build a family from masks, translating representation errors.

    Raises:
        InputError: If a mask uses labels beyond the universe cap
    """
    try:
        return SetFamily(masks, universe)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def make_family(sets: Iterable[Iterable[int]]) -> SetFamily:
    """
    Build a family from label collections.

    Duplicates are merged and the universe is the union of the sets.

    Args:
        sets: Iterable of label iterables, e.g. [[1, 2], [], [2]]

    Returns:
        The SetFamily in canonical order

    Raises:
        InputError: If a label is outside 1..64
    """
    masks = []
    for labels in sets:
        try:
            masks.append(mask_of(labels))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    return family_from_masks(masks)


def close_under_union(generators: Iterable[int]) -> SetFamily:
    """
    ⟨G⟩: every finite union of generators, ∅ included.

    Args:
        generators: Set masks

    Returns:
        The union-closed family generated
    """
    closed = {0}
    for generator in generators:
        closed |= {member | generator for member in closed}
    return family_from_masks(closed)


def remove_set(family: SetFamily, mask: int) -> SetFamily:
    return SetFamily(m for m in family if m != mask)


def relabel(family: SetFamily, mapping: Dict[int, int]) -> SetFamily:
    """
    Apply a bijection of labels to every set and to the universe.

    Args:
        family: Source family
        mapping: label -> new label, defined on the whole universe

    Raises:
        InputError: If the mapping is not injective or misses an element
    """
    elements = family.elements
    missing = [label for label in elements if label not in mapping]
    if missing:
        raise InputError(f"relabeling misses elements {missing}")
    images = [mapping[label] for label in elements]
    if len(set(images)) != len(images):
        raise InputError("relabeling is not injective")

    def image(mask: int) -> int:
        return mask_of(mapping[label] for label in iter_labels(mask))

    try:
        return SetFamily((image(m) for m in family), image(family.universe))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def compact(family: SetFamily) -> SetFamily:
    """Relabel the universe to [n] preserving the order of labels."""
    mapping = {label: rank for rank, label in enumerate(family.elements, start=1)}
    return relabel(family, mapping)


# =============================================================================
# CONSTRUCTORS
# =============================================================================

def _check_size(what: str, n: int, limit: int) -> None:
    if n < 0:
        raise InputError(f"{what} must be non-negative")
    if n > limit:
        raise GuardExceededError(what, n, limit)


def staircase(n: int) -> SetFamily:
    """{∅, [1], [2], ..., [n]}."""
    _check_size("n", n, MAX_LABEL)
    return SetFamily(full_mask(k) for k in range(n + 1))


def power_set(n: int) -> SetFamily:
    """P([n])."""
    _check_size("n", n, settings.POWER_SET_MAX)
    return SetFamily(range(1 << n))


def binom_at_least(n: int, k: int) -> SetFamily:
    """⟨C([n], k)⟩ = C([n], ≥k) ∪ {∅}."""
    _check_size("n", n, settings.POWER_SET_MAX)
    if k < 1 or k > max(n, 1):
        raise InputError(f"k={k} must lie in 1..n")
    masks = [0]
    for size in range(k, n + 1):
        for combo in combinations(range(1, n + 1), size):
            masks.append(mask_of(combo))
    return SetFamily(masks)


# =============================================================================
# STRUCTURE
# =============================================================================

def is_union_closed(family: SetFamily) -> bool:
    sets = family.sets
    for i, first in enumerate(sets):
        for second in sets[i + 1:]:
            if first | second not in family:
                return False
    return True


def require_union_closed(family: SetFamily, operation: str) -> None:
    if not is_union_closed(family):
        raise ContractViolationError(f"{operation} requires a union-closed family")


def irreducibles(family: SetFamily) -> List[int]:
    """
    J(F): non-empty members that are not the union of two strictly smaller members.

    In a union-closed family a member is reducible exactly when the union of
    the members strictly inside it is the member itself.

    Raises:
        ContractViolationError: If the family is not union-closed
    """
    require_union_closed(family, "irreducibles")
    result = []
    for mask in family.nonempty():
        below = 0
        for other in family:
            if other != mask and is_subset(other, mask):
                below |= other
        if below != mask:
            result.append(mask)
    return result


def minimal_sets(family: SetFamily) -> List[int]:
    """Inclusion-minimal non-empty members, in canonical order."""
    nonempty = family.nonempty()
    return [
        mask for mask in nonempty
        if not any(other != mask and is_subset(other, mask) for other in nonempty)
    ]


def restrict(family: SetFamily, subset: int, mode: RestrictMode = RestrictMode.MEETS) -> SetFamily:
    """
    F_S (members meeting S) or F_~S (members disjoint from S).
    """
    mode = RestrictMode(mode)
    if mode == RestrictMode.MEETS:
        return SetFamily(m for m in family if m & subset)
    return SetFamily(m for m in family if not m & subset)


def subtract(family: SetFamily, subset: int) -> SetFamily:
    """F ⊖ S, duplicates merged; labels are kept."""
    return SetFamily(m & ~subset for m in family)


# =============================================================================
# TOPOLOGY
# =============================================================================

def is_supratopology(family: SetFamily) -> bool:
    """Union-closed, containing ∅ and the universe X."""
    return family.has_empty and family.universe in family and is_union_closed(family)


def require_supratopology(family: SetFamily, operation: str) -> None:
    if not is_supratopology(family):
        raise ContractViolationError(
            f"{operation} requires a supratopology (union-closed, containing ∅ and X)"
        )


def _require_point(family: SetFamily, x: int) -> None:
    if not isinstance(x, int) or x < 1 or x > MAX_LABEL or not family.universe & bit(x):
        raise InputError(f"element {x} is not in the universe {format_set(family.universe)}")


def interior(family: SetFamily, subset: int) -> int:
    """Largest open set inside A."""
    result = 0
    for mask in family:
        if is_subset(mask, subset):
            result |= mask
    return result


def closure(family: SetFamily, subset: int) -> int:
    """Ā = X ∖ ((X ∖ A)°)."""
    universe = family.universe
    return universe & ~interior(family, universe & ~subset)


def topo(family: SetFamily, subset: int, op: TopoOp) -> int:
    require_supratopology(family, "topo")
    if TopoOp(op) == TopoOp.INTERIOR:
        return interior(family, subset)
    return closure(family, subset)


def u_tilde(family: SetFamily, x: int) -> int:
    """Ũx: union of the open sets avoiding x (∅ when there are none)."""
    _require_point(family, x)
    mask = bit(x)
    result = 0
    for member in family:
        if not member & mask:
            result |= member
    return result


def bar(family: SetFamily, x: int) -> int:
    return family.universe & ~u_tilde(family, x)


def shadow(family: SetFamily, x: int) -> int:
    return bar(family, x) & ~bit(x)


def kernel(family: SetFamily, x: int) -> int:
    """{y : F_x ⊆ F_y}."""
    _require_point(family, x)
    membership = family.membership()
    own = membership[x]
    result = 0
    for label, containing in membership.items():
        if is_subset(own, containing):
            result |= bit(label)
    return result


def shell(family: SetFamily, x: int) -> int:
    return kernel(family, x) & ~bit(x)


_POINT_OPS = {
    PointOp.BAR: bar,
    PointOp.SHADOW: shadow,
    PointOp.KERNEL: kernel,
    PointOp.SHELL: shell,
    PointOp.U_TILDE: u_tilde,
}


def point_ops(family: SetFamily, x: int, op: PointOp) -> int:
    require_supratopology(family, "point_ops")
    return _POINT_OPS[PointOp(op)](family, x)


# =============================================================================
# FREQUENCIES
# =============================================================================

def frequency(family: SetFamily, a: int) -> int:
    """|F_a|."""
    if not isinstance(a, int) or a < 1 or a > MAX_LABEL or not family.span & bit(a):
        raise InputError(f"element {a} is not in U(F)")
    return popcount(family.membership()[a])


def max_frequency(family: SetFamily) -> Tuple[int, int]:
    """
    Most frequent element of U(F), smallest label on ties.

    Returns:
        (element, count)

    Raises:
        InputError: If U(F) is empty
    """
    span = family.span
    if not span:
        raise InputError("max_frequency needs a non-empty universe")
    membership = family.membership()
    best, best_count = 0, -1
    for label in iter_labels(span):
        count = popcount(membership[label])
        if count > best_count:
            best, best_count = label, count
    return best, best_count


# =============================================================================
# PREDICATES
# =============================================================================

def _separating_by_membership(family: SetFamily) -> bool:
    membership = family.membership()
    rows = [membership[label] for label in iter_labels(family.span)]
    return len(set(rows)) == len(rows)


def _separating_by_u_tilde(family: SetFamily) -> bool:
    values = [u_tilde(family, label) for label in iter_labels(family.span)]
    return len(set(values)) == len(values)


def is_separating(family: SetFamily) -> bool:
    """
    Distinct elements of U(F) lie in distinct sub-collections F_a.

    Both the F_a route and the Ũa route are evaluated; they must agree.
    """
    by_membership = _separating_by_membership(family)
    by_u_tilde = _separating_by_u_tilde(family)
    if by_membership != by_u_tilde:
        raise InvariantBreach(
            "separation via F_a and via Ũa disagree", family.to_lists()
        )
    return by_membership


def is_normalized(family: SetFamily) -> bool:
    """Separating, union-closed, ∅ ∈ F and |F| = |U(F)| + 1."""
    return (
        family.has_empty
        and len(family) == popcount(family.span) + 1
        and is_union_closed(family)
        and is_separating(family)
    )


def require_normalized(family: SetFamily, operation: str) -> None:
    if not is_normalized(family):
        raise ContractViolationError(f"{operation} requires a normalized family")


def is_independent(family: SetFamily) -> bool:
    # Import here to avoid circular imports
    from uclab.services.axiom_service import find_dependence
    return find_dependence(family) is None


def predicates(family: SetFamily) -> FamilyPredicates:
    """Evaluate the four structural predicates of a family."""
    return FamilyPredicates(
        is_union_closed=is_union_closed(family),
        is_separating=is_separating(family),
        is_normalized=is_normalized(family),
        is_independent=is_independent(family),
        size=len(family),
        universe_size=popcount(family.span)
    )


def describe(family: SetFamily) -> str:
    """Compact brace notation for log messages."""
    return "{" + ", ".join("∅" if m == 0 else format_set(m) for m in family) + "}"


def labels_of(masks: Iterable[int]) -> List[List[int]]:
    return [elements_of(mask) for mask in masks]
