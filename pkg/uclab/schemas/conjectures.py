"""
Pydantic schemas for conjecture checks and certificates.
"""

import enum
from typing import List, Optional

from pydantic import BaseModel, Field


class FranklVerdict(str, enum.Enum):
    """Frankl verdict: strict ⇔ 2·freq > |F|, sharp ⇔ 2·freq = |F|."""
    STRICT = "strict"
    SHARP = "sharp"
    FAILS = "fails"
    EXCLUDED = "excluded"

    @property
    def holds(self) -> bool:
        return self in (FranklVerdict.STRICT, FranklVerdict.SHARP, FranklVerdict.EXCLUDED)


class FranklReport(BaseModel):
    """Max-frequency element, its frequency, the family size and the verdict."""
    best: Optional[int] = None
    freq: int = 0
    total: int
    verdict: FranklVerdict

    @property
    def holds(self) -> bool:
        return self.verdict.holds


class SalzbornVerdict(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    EXCLUDED = "excluded"


class SalzbornReport(BaseModel):
    """Largest irreducible set of a normalized family against half its size."""
    verdict: SalzbornVerdict
    witness: Optional[List[int]] = None
    size: int = 0
    total: int
    sharp: bool = False

    @property
    def holds(self) -> bool:
        return self.verdict != SalzbornVerdict.FAILS


class ChainCertificate(BaseModel):
    """S_1 ⊆ ... ⊆ S_n with |S_k| = k and counts[k] ≥ |F| / 2^k."""
    chain: List[List[int]]
    counts: List[int]
    total: int


class PoonenOutcome(str, enum.Enum):
    NOT_SHARP = "not-sharp"
    SHARP_AND_POWERSET = "sharp-and-powerset"
    SHARP_NOT_POWERSET = "sharp-not-powerset"


class PoonenProbe(BaseModel):
    """Irreducible-size arithmetic along a chain of trivial parents."""
    n: int
    max_irreducible: int
    steps: int
    balancing_steps: int
    final_size: int
    final_max_irreducible: int
    arithmetic_holds: bool
    balanced: Optional[bool] = None


class PowerSetDualProfile(BaseModel):
    """Size classes and irreducible sizes of the dual of P([n])."""
    n: int
    size_classes: List[List[int]] = Field(default_factory=list)
    expected_classes: List[List[int]] = Field(default_factory=list)
    irreducible_sizes: List[int] = Field(default_factory=list)

    @property
    def matches(self) -> bool:
        half = 2 ** (self.n - 1)
        return (
            self.size_classes == self.expected_classes
            and all(size == half for size in self.irreducible_sizes)
        )
