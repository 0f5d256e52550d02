"""
Canonical labeling of set families.

Elements are ordered by iterated partition refinement on the element/set
incidence structure; remaining ties are broken by individualizing one element
at a time and keeping the lexicographically least relabeled family. Elements
with identical membership rows are interchangeable, so only one of them is
individualized per cell.
"""

import logging
from itertools import permutations
from typing import Dict, List, Optional, Tuple

from uclab.core.exceptions import GuardExceededError
from uclab.models.family import SetFamily
from uclab.utils.bitmask import bit, iter_labels, popcount, set_key

logger = logging.getLogger(__name__)

CanonicalForm = Tuple[int, Tuple[int, ...]]

AUTOMORPHISM_MAX = 8


class _Incidence:
    """Element/set incidence lists for one family."""

    def __init__(self, family: SetFamily):
        self.sets = family.sets
        self.elements = family.elements
        self.rows = family.membership()
        self.members = [list(iter_labels(mask)) for mask in self.sets]
        self.positions = {
            label: [p for p in range(len(self.sets)) if self.sets[p] & bit(label)]
            for label in self.elements
        }

    def initial_signature(self, label: int) -> tuple:
        row = self.rows[label]
        sizes = tuple(sorted(popcount(self.sets[p]) for p in self.positions[label]))
        cooccurrence = tuple(sorted(
            popcount(row & self.rows[other]) for other in self.elements if other != label
        ))
        return (popcount(row), sizes, cooccurrence)


def _split(cells: List[List[int]], signature) -> List[List[int]]:
    result = []
    for cell in cells:
        if len(cell) == 1:
            result.append(cell)
            continue
        groups: Dict[tuple, List[int]] = {}
        for label in cell:
            groups.setdefault(signature(label), []).append(label)
        for key in sorted(groups):
            result.append(groups[key])
    return result


def _refine(incidence: _Incidence, cells: List[List[int]]) -> List[List[int]]:
    while True:
        color = {label: index for index, cell in enumerate(cells) for label in cell}
        set_colors = [tuple(sorted(color[label] for label in members)) for members in incidence.members]

        def signature(label: int) -> tuple:
            return tuple(sorted(set_colors[p] for p in incidence.positions[label]))

        refined = _split(cells, signature)
        if len(refined) == len(cells):
            return refined
        cells = refined


def _encode(incidence: _Incidence, cells: List[List[int]]) -> Tuple[int, ...]:
    new_label = {cell[0]: rank for rank, cell in enumerate(cells, start=1)}
    relabeled = []
    for members in incidence.members:
        mask = 0
        for label in members:
            mask |= bit(new_label[label])
        relabeled.append(mask)
    return tuple(sorted(relabeled, key=set_key))


def canonical_form(family: SetFamily) -> CanonicalForm:
    """
    Isomorphism-invariant encoding of a family.

    Args:
        family: Any family over at most 64 labels

    Returns:
        (universe size, sets relabeled to the canonical order and sorted)
    """
    incidence = _Incidence(family)
    n = len(incidence.elements)
    if n == 0:
        return (0, family.sets)

    cells = _split([list(incidence.elements)], incidence.initial_signature)
    best: List[Optional[Tuple[int, ...]]] = [None]

    def search(cells: List[List[int]]) -> None:
        cells = _refine(incidence, cells)
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            encoding = _encode(incidence, cells)
            if best[0] is None or encoding < best[0]:
                best[0] = encoding
            return
        cell = cells[target]
        tried = set()
        for label in cell:
            row = incidence.rows[label]
            if row in tried:
                continue
            tried.add(row)
            rest = [other for other in cell if other != label]
            search(cells[:target] + [[label], rest] + cells[target + 1:])

    search(cells)
    return (n, best[0])


def isomorphic(first: SetFamily, second: SetFamily) -> bool:
    """True when a bijection of universes maps one family onto the other."""
    if len(first) != len(second):
        return False
    if popcount(first.universe) != popcount(second.universe):
        return False
    return canonical_form(first) == canonical_form(second)


def automorphism_count(family: SetFamily) -> int:
    """
    Number of label permutations fixing the family (brute force).

    Raises:
        GuardExceededError: If the universe has more than 8 elements
    """
    elements = family.elements
    if len(elements) > AUTOMORPHISM_MAX:
        raise GuardExceededError("universe size", len(elements), AUTOMORPHISM_MAX)
    target = set(family.sets)
    count = 0
    for image in permutations(elements):
        mapping = dict(zip(elements, image))
        mapped = set()
        for mask in family.sets:
            new_mask = 0
            for label in iter_labels(mask):
                new_mask |= bit(mapping[label])
            mapped.add(new_mask)
        if mapped == target:
            count += 1
    return count
