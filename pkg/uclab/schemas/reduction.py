"""
Pydantic schemas for reduction steps and descendent nodes.
"""

from typing import List

from pydantic import BaseModel, Field

from uclab.models.reduction import DescendentNode, ReductionStep
from uclab.schemas.family import FamilyRead
from uclab.utils.bitmask import elements_of


class ReductionStepRead(BaseModel):
    """Schema for reading a reduction step."""
    minimal_set: List[int]
    a: int
    result: FamilyRead

    @classmethod
    def from_step(cls, step: ReductionStep) -> "ReductionStepRead":
        return cls(
            minimal_set=elements_of(step.minimal_set),
            a=step.a,
            result=FamilyRead.from_family(step.result)
        )


class DescendentNodeRead(BaseModel):
    """Schema for reading a descendent node; lineage lists the dual-side choices."""
    depth: int
    family: FamilyRead
    lineage: List[List[int]] = Field(default_factory=list)

    @classmethod
    def from_node(cls, node: DescendentNode) -> "DescendentNodeRead":
        return cls(
            depth=node.depth,
            family=FamilyRead.from_family(node.family),
            lineage=[elements_of(step.minimal_set) for step in node.lineage]
        )
