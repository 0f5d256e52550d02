"""
IndexedFamily value type.
An explicitly ordered list of distinct non-empty sets, each with an index label.
"""

from typing import Iterable, Iterator, Optional, Sequence, Tuple

from uclab.utils.bitmask import elements_of, format_set


class IndexedFamily:
    """
    Ordered carrier for the iota operator.

    Item i has the index label labels[i]; labels default to 1..s. The iota
    image of an element j is expressed in these labels.
    """

    __slots__ = ("_items", "_labels", "_universe")

    def __init__(self, items: Iterable[int], labels: Optional[Sequence[int]] = None):
        items = tuple(items)
        if labels is None:
            labels = tuple(range(1, len(items) + 1))
        labels = tuple(labels)
        if len(labels) != len(items):
            raise ValueError("one label is required per item")
        if len(set(labels)) != len(labels) or any(label < 1 for label in labels):
            raise ValueError("index labels must be distinct positive integers")
        if any(item == 0 for item in items):
            raise ValueError("indexed families hold non-empty sets only")
        if len(set(items)) != len(items):
            raise ValueError("indexed families hold distinct sets only")
        universe = 0
        for item in items:
            universe |= item
        self._items: Tuple[int, ...] = items
        self._labels: Tuple[int, ...] = labels
        self._universe = universe

    @property
    def items(self) -> Tuple[int, ...]:
        return self._items

    @property
    def labels(self) -> Tuple[int, ...]:
        return self._labels

    @property
    def universe(self) -> int:
        return self._universe

    def pairs(self) -> Iterator[Tuple[int, int]]:
        """Yield (label, item) in order."""
        return zip(self._labels, self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IndexedFamily):
            return NotImplemented
        return self._items == other._items and self._labels == other._labels

    def __hash__(self) -> int:
        return hash((self._items, self._labels))

    def __repr__(self) -> str:
        body = ", ".join(f"{label}:{format_set(item)}" for label, item in self.pairs())
        return f"<IndexedFamily([{body}])>"

    def to_lists(self):
        return [elements_of(item) for item in self._items]
