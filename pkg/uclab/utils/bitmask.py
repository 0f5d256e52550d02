"""
Bitmask helpers for sets over the labels 1..64.
Element k is stored at bit k-1.
"""

from typing import Iterable, Iterator, List, Tuple


MAX_LABEL = 64


def bit(label: int) -> int:
    """Mask of the singleton {label}."""
    return 1 << (label - 1)


def mask_of(labels: Iterable[int]) -> int:
    """
    Build a mask from element labels.

    Args:
        labels: Positive labels, each at most MAX_LABEL

    Returns:
        The characteristic vector as an int

    Raises:
        ValueError: If a label is outside 1..MAX_LABEL
    """
    mask = 0
    for label in labels:
        if not isinstance(label, int) or label < 1 or label > MAX_LABEL:
            raise ValueError(f"element label {label!r} outside 1..{MAX_LABEL}")
        mask |= 1 << (label - 1)
    return mask


def full_mask(n: int) -> int:
    """Mask of [n] = {1, ..., n}."""
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def set_key(mask: int) -> Tuple[int, int]:
    """Canonical order of sets: cardinality first, then numeric value."""
    return (popcount(mask), mask)


def iter_labels(mask: int) -> Iterator[int]:
    """Yield the labels of a mask in increasing order."""
    label = 1
    while mask:
        if mask & 1:
            yield label
        mask >>= 1
        label += 1


def elements_of(mask: int) -> List[int]:
    return list(iter_labels(mask))


def max_label(mask: int) -> int:
    """Largest label in a mask, 0 for the empty mask."""
    return mask.bit_length()


def iter_submasks(mask: int) -> Iterator[int]:
    """Yield every submask of mask in increasing numeric order."""
    labels = elements_of(mask)
    for combo in range(1 << len(labels)):
        sub = 0
        for position, label in enumerate(labels):
            if combo >> position & 1:
                sub |= bit(label)
        yield sub


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def format_set(mask: int) -> str:
    """Human form used in log messages: {1,2,3} or {}."""
    return "{" + ",".join(str(label) for label in iter_labels(mask)) + "}"
