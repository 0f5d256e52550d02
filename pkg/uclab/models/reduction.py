"""
Reduction records: one step of the normalized reduction and descendent tree nodes.
"""

from dataclasses import dataclass, field
from typing import Tuple

from uclab.models.family import SetFamily


@dataclass(frozen=True)
class ReductionStep:
    """N' = (N \\ {M}) ⊖ {a} for a minimal set M of a normalized family N."""
    parent: SetFamily
    minimal_set: int
    a: int
    result: SetFamily


@dataclass(frozen=True)
class DescendentNode:
    """A descendent family with the dual-side reductions that produced it."""
    family: SetFamily
    lineage: Tuple[ReductionStep, ...] = field(default_factory=tuple)

    @property
    def depth(self) -> int:
        return len(self.lineage)
