"""
Pydantic schemas for enumeration requests and oracle reports.
"""

import enum
from typing import List, Set

from pydantic import BaseModel, Field


class Constraint(str, enum.Enum):
    """Constraints an enumerated family must satisfy."""
    CONTAINS_EMPTY = "contains_empty"
    CONTAINS_UNIVERSE = "contains_universe"
    SEPARATING = "separating"
    NORMALIZED = "normalized"
    INDEPENDENT = "independent"


class EnumSpec(BaseModel):
    """Schema for an enumeration request over [n]."""
    n: int = Field(..., ge=0)
    constraints: Set[Constraint] = Field(default_factory=set)
    up_to_iso: bool = False


class Discrepancy(BaseModel):
    """One failed cross-check on one family."""
    check: str
    family: List[List[int]]
    detail: str = ""


class CrosscheckReport(BaseModel):
    """Result of running the oracles over a family census."""
    n: int
    sampled: bool = False
    families_checked: int = 0
    normalized_checked: int = 0
    independent_checked: int = 0
    union_closed_checked: int = 0
    discrepancies: List[Discrepancy] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.discrepancies


class DescpowerReport(BaseModel):
    """Exploration of every descendent of P([n])."""
    n: int
    dedup: str
    nodes: int = 0
    levels: List[int] = Field(default_factory=list)
    frankl_failures: List[List[List[int]]] = Field(default_factory=list)
    salzborn_failures: List[List[List[int]]] = Field(default_factory=list)
    parity_failures: List[List[List[int]]] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.frankl_failures or self.salzborn_failures or self.parity_failures)


class StaircaseReport(BaseModel):
    """Independent classes among the normalized families for each n."""
    n: int
    classes: int
    independent: int
    independent_is_staircase: bool
