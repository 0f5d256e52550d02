"""
Dual family service.
Indexing, the iota operator, dual families, a_N, ε and the double-dual identity.

INDEXING:
- canonical: non-empty sets in (cardinality, mask) order, labelled 1..s
- given: an IndexedFamily supplied by the caller; iota images keep their labels,
  so iota(iota(H)) == H item by item
"""

import logging
from typing import Dict, List, Optional, Tuple

from uclab.core.exceptions import (
    ContractViolationError,
    InputError,
    InvariantBreach,
    NotSeparatingError
)
from uclab.models.family import SetFamily
from uclab.models.indexed import IndexedFamily
from uclab.services.family_service import (
    close_under_union,
    irreducibles,
    is_normalized,
    relabel,
    require_normalized
)
from uclab.utils.bitmask import bit, elements_of, is_subset, iter_labels, popcount

logger = logging.getLogger(__name__)


# =============================================================================
# INDEXING AND IOTA
# =============================================================================

def index_canonically(family: SetFamily) -> IndexedFamily:
    """Drop ∅ and index the remaining sets in canonical order."""
    return IndexedFamily(family.nonempty())


def index_irreducibles(masks: List[int]) -> IndexedFamily:
    """Index a list of sets in canonical order (used for J(N))."""
    return index_canonically(SetFamily(masks))


def _iota_images(indexed: IndexedFamily) -> List[Tuple[int, int]]:
    """(j, H^{ι_j}) for every element j of the universe, increasing j."""
    images: Dict[int, int] = {j: 0 for j in iter_labels(indexed.universe)}
    for label, item in indexed.pairs():
        for j in iter_labels(item):
            images[j] |= bit(label)
    return sorted(images.items())


def iota(indexed: IndexedFamily) -> IndexedFamily:
    """
    H^ι: for each element j, the labels of the items containing j.

    Args:
        indexed: Non-empty indexed family

    Returns:
        IndexedFamily whose item labelled j is H^{ι_j}

    Raises:
        ContractViolationError: If the item list is empty
        NotSeparatingError: If two elements give the same index set
    """
    if not len(indexed):
        raise ContractViolationError("iota needs at least one item")
    images = _iota_images(indexed)
    seen: Dict[int, int] = {}
    for j, image in images:
        if image in seen:
            raise NotSeparatingError((seen[image], j))
        seen[image] = j
    return IndexedFamily(
        (image for _, image in images),
        labels=[j for j, _ in images]
    )


def iota_subset(indexed: IndexedFamily, subset: int) -> int:
    """
    H^{ι_A}: labels of the items meeting A.

    Raises:
        InputError: If A is not inside the universe of H
    """
    if not is_subset(subset, indexed.universe):
        raise InputError("iota_subset argument must lie in the universe")
    result = 0
    for label, item in indexed.pairs():
        if item & subset:
            result |= bit(label)
    return result


def epsilon(family: SetFamily) -> int:
    """1 if ∅ belongs to the family, else 0."""
    return 1 if family.has_empty else 0


# =============================================================================
# DUAL FAMILIES
# =============================================================================

def dual_indexed(indexed: IndexedFamily) -> SetFamily:
    """⟨H^ι⟩; duplicate images merge inside the closure."""
    if not len(indexed):
        return SetFamily([0])
    return close_under_union(image for _, image in _iota_images(indexed))


def dual(family: SetFamily, indexed: Optional[IndexedFamily] = None) -> SetFamily:
    """
    L* = ⟨ι(indexing of L ∖ {∅})⟩.

    Args:
        family: Source family L
        indexed: Explicit indexing of L ∖ {∅}; canonical when omitted

    Returns:
        The dual family; {∅} for L ∈ {∅, {∅}}

    Raises:
        ContractViolationError: If the given indexing does not list L ∖ {∅}
    """
    if indexed is None:
        indexed = index_canonically(family)
    elif set(indexed.items) != set(family.nonempty()):
        raise ContractViolationError("the indexing must list exactly the non-empty sets")
    return dual_indexed(indexed)


def a_of(family: SetFamily) -> int:
    """
    The element of a normalized family lying in every non-empty set.

    Raises:
        ContractViolationError: If the family is not normalized or is {∅}
    """
    require_normalized(family, "a_of")
    if len(family) < 2:
        raise ContractViolationError("a_of needs a non-empty member")
    # ∅ sits at position 0, every other position holds a non-empty set
    nonempty_positions = ((1 << len(family)) - 1) & ~1
    membership = family.membership()
    candidates = [
        label for label in iter_labels(family.span)
        if membership[label] == nonempty_positions
    ]
    if len(candidates) != 1:
        raise ContractViolationError("normalized family without a unique common element")
    return candidates[0]


def double_dual_irreducibles(family: SetFamily) -> SetFamily:
    """
    J(N)**, computed as the canonical dual of the plain family J(N)*.

    Each non-empty member of J(N)* is then renamed to the element of N whose
    ι image it is, so the result is comparable with N label for label.

    Returns:
        J(N)**, equal to N for every normalized N

    Raises:
        InvariantBreach: If J(N)* has a member that is no ι image
    """
    require_normalized(family, "double_dual_irreducibles")
    if not irreducibles(family):
        return SetFamily([0])
    images, first = irreducibles_dual(family)
    owner = {item: label for label, item in images.pairs()}
    mapping = {}
    for position, member in index_canonically(first).pairs():
        if member not in owner:
            raise InvariantBreach(f"J(N)* member {elements_of(member)} is no ι image", family.to_lists())
        mapping[position] = owner[member]
    return relabel(dual(first), mapping)


def irreducibles_dual(family: SetFamily) -> Tuple[IndexedFamily, SetFamily]:
    """
    J(N)* for a normalized N, with the indexing induced on its non-empty generators.

    Returns:
        (ι(J(N)) as an indexed family, J(N)*)
    """
    require_normalized(family, "irreducibles_dual")
    generators = irreducibles(family)
    if not generators:
        return IndexedFamily([]), SetFamily([0])
    images = iota(index_irreducibles(generators))
    return images, close_under_union(images.items)


def dual_is_normalized(family: SetFamily) -> bool:
    """Whether the dual of the family is normalized."""
    return is_normalized(dual(family))


def dual_size_matches(family: SetFamily) -> bool:
    """|L*| = |L| + 1 − ε_L."""
    return len(dual(family)) == len(family) + 1 - epsilon(family)


def dual_universe_size(family: SetFamily) -> int:
    return popcount(dual(family).span)
