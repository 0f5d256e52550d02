"""
Pydantic schemas for families crossing the file and report boundary.
"""

from typing import List, Optional

from pydantic import BaseModel, Field, field_validator

from uclab.models.family import SetFamily
from uclab.utils.bitmask import MAX_LABEL, elements_of


def _check_labels(labels: List[int]) -> List[int]:
    for label in labels:
        if label < 1 or label > MAX_LABEL:
            raise ValueError(f"element label {label} outside 1..{MAX_LABEL}")
    return labels


class FamilyFile(BaseModel):
    """JSON form of a family file."""
    universe: Optional[List[int]] = None
    sets: List[List[int]] = Field(default_factory=list)

    @field_validator("universe")
    @classmethod
    def universe_labels_in_range(cls, v):
        """Validate declared universe labels."""
        return v if v is None else _check_labels(v)

    @field_validator("sets")
    @classmethod
    def set_labels_in_range(cls, v):
        """Validate member labels."""
        for labels in v:
            _check_labels(labels)
        return v


class FamilyRead(BaseModel):
    """Schema for reading a family: universe and sets as sorted label lists."""
    universe: List[int]
    sets: List[List[int]]

    @classmethod
    def from_family(cls, family: SetFamily) -> "FamilyRead":
        return cls(universe=elements_of(family.universe), sets=family.to_lists())


class FamilyPredicates(BaseModel):
    """Structural predicates of a family."""
    is_union_closed: bool
    is_separating: bool
    is_normalized: bool
    is_independent: bool
    size: int
    universe_size: int
