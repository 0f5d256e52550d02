# Schemas module initialization

from uclab.schemas.report import ErrorReport, SuiteItemResult, CommandResult
from uclab.schemas.family import FamilyFile, FamilyRead, FamilyPredicates
from uclab.schemas.axioms import (
    AxiomId, Witness, AxiomVerdict, AxiomProfile,
    HasseViolation, ImpliedRelation
)
from uclab.schemas.conjectures import (
    FranklVerdict, FranklReport, SalzbornVerdict, SalzbornReport,
    ChainCertificate, PoonenOutcome, PoonenProbe, PowerSetDualProfile
)
from uclab.schemas.reduction import ReductionStepRead, DescendentNodeRead
from uclab.schemas.enumeration import (
    Constraint, EnumSpec, Discrepancy, CrosscheckReport,
    DescpowerReport, StaircaseReport
)

__all__ = [
    # Report
    "ErrorReport", "SuiteItemResult", "CommandResult",
    # Family
    "FamilyFile", "FamilyRead", "FamilyPredicates",
    # Axioms
    "AxiomId", "Witness", "AxiomVerdict", "AxiomProfile",
    "HasseViolation", "ImpliedRelation",
    # Conjectures
    "FranklVerdict", "FranklReport", "SalzbornVerdict", "SalzbornReport",
    "ChainCertificate", "PoonenOutcome", "PoonenProbe", "PowerSetDualProfile",
    # Reduction
    "ReductionStepRead", "DescendentNodeRead",
    # Enumeration
    "Constraint", "EnumSpec", "Discrepancy", "CrosscheckReport",
    "DescpowerReport", "StaircaseReport"
]
