"""
Pydantic schemas for separation axiom verdicts.
"""

import enum
from typing import FrozenSet, List, Optional

from pydantic import BaseModel, Field


class AxiomId(str, enum.Enum):
    """Separation axioms of a supratopological space."""
    T0 = "T0"
    TI = "TI"
    TUD = "TUD"
    TD = "TD"
    TiD = "TiD"
    TDD = "TDD"
    TF = "TF"
    TFF = "TFF"
    TY = "TY"
    TYS = "TYS"
    T1 = "T1"


class Witness(BaseModel):
    """
    Counter-witness for a failing axiom.

    Points are stored in x and y; subsets in s and t. For TDD, `via` names the
    component axiom whose witness is carried.
    """
    x: Optional[int] = None
    y: Optional[int] = None
    s: Optional[List[int]] = None
    t: Optional[List[int]] = None
    via: Optional[AxiomId] = None


class AxiomVerdict(BaseModel):
    """Verdict for one axiom, with a witness when it fails."""
    axiom: AxiomId
    holds: bool
    witness: Optional[Witness] = None
    method: str = "fast"


class AxiomProfile(BaseModel):
    """All eleven verdicts for one family."""
    verdicts: List[AxiomVerdict] = Field(default_factory=list)

    def verdict(self, axiom: AxiomId) -> AxiomVerdict:
        for verdict in self.verdicts:
            if verdict.axiom == axiom:
                return verdict
        raise KeyError(axiom)

    def holds(self, axiom: AxiomId) -> bool:
        return self.verdict(axiom).holds

    def holding(self) -> FrozenSet[AxiomId]:
        return frozenset(v.axiom for v in self.verdicts if v.holds)


class HasseViolation(BaseModel):
    """A family on which an implication of the lattice fails."""
    family: List[List[int]]
    premises: List[AxiomId]
    conclusion: AxiomId


class ImpliedRelation(BaseModel):
    """An implication observed on every sampled family but absent from the lattice."""
    premise: AxiomId
    conclusion: AxiomId
    support: int
