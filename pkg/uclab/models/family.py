"""
SetFamily value type.
An immutable collection of distinct subsets of a labeled universe.
"""

from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from uclab.utils.bitmask import (
    MAX_LABEL,
    elements_of,
    format_set,
    iter_labels,
    is_subset,
    set_key,
)


class SetFamily:
    """
    Finite family of sets stored as bitmasks.

    Sets are kept in canonical order (cardinality, then numeric mask value).
    The universe defaults to the union of the sets; an explicitly declared
    universe may be larger (used for parsed files that name unused elements).
    """

    __slots__ = ("_sets", "_universe", "_lookup", "_membership")

    def __init__(self, sets: Iterable[int] = (), universe: Optional[int] = None):
        unique = sorted(set(sets), key=set_key)
        span = 0
        for mask in unique:
            if mask < 0:
                raise ValueError("set masks must be non-negative")
            span |= mask
        if span.bit_length() > MAX_LABEL or (universe or 0).bit_length() > MAX_LABEL:
            raise ValueError(f"element labels are limited to 1..{MAX_LABEL}")
        if universe is None:
            universe = span
        elif not is_subset(span, universe):
            raise ValueError(
                f"sets use elements {elements_of(span & ~universe)} outside the universe"
            )
        self._sets: Tuple[int, ...] = tuple(unique)
        self._universe = universe
        self._lookup = frozenset(unique)
        self._membership: Optional[Dict[int, int]] = None

    @property
    def sets(self) -> Tuple[int, ...]:
        return self._sets

    @property
    def universe(self) -> int:
        return self._universe

    @property
    def span(self) -> int:
        """U(F): the union of all member sets."""
        span = 0
        for mask in self._sets:
            span |= mask
        return span

    @property
    def elements(self) -> List[int]:
        return elements_of(self._universe)

    @property
    def has_empty(self) -> bool:
        return 0 in self._lookup

    def nonempty(self) -> Tuple[int, ...]:
        return self._sets[1:] if self.has_empty else self._sets

    def membership(self) -> Dict[int, int]:
        """
        F_x for every universe element x, as a bitmask over set positions.

        Position i (bit i) refers to self.sets[i].
        """
        if self._membership is None:
            table = {label: 0 for label in iter_labels(self._universe)}
            for position, mask in enumerate(self._sets):
                for label in iter_labels(mask):
                    table[label] |= 1 << position
            self._membership = table
        return self._membership

    def normalized(self) -> "SetFamily":
        """The same sets with universe = U(F)."""
        if self._universe == self.span:
            return self
        return SetFamily(self._sets)

    def to_lists(self) -> List[List[int]]:
        return [elements_of(mask) for mask in self._sets]

    def __len__(self) -> int:
        return len(self._sets)

    def __iter__(self) -> Iterator[int]:
        return iter(self._sets)

    def __contains__(self, mask: object) -> bool:
        return mask in self._lookup

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self._sets == other._sets and self._universe == other._universe

    def __hash__(self) -> int:
        return hash((self._sets, self._universe))

    def __repr__(self) -> str:
        body = ", ".join("∅" if mask == 0 else format_set(mask) for mask in self._sets)
        return f"<SetFamily({{{body}}}, universe={format_set(self._universe)})>"
