"""
Custom exceptions for the uclab toolkit.
These provide clear, specific error handling for family construction,
operation contracts, and failed mathematical checks.
"""

from typing import List, Optional, Tuple

from uclab.schemas.report import ErrorReport
from uclab.utils.bitmask import elements_of


EXIT_OK = 0
EXIT_PROPERTY_FAILED = 1
EXIT_USAGE = 2


class UCLabError(Exception):
    """Base exception for all uclab errors."""
    exit_code = EXIT_USAGE

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)

    def details(self) -> dict:
        return {}

    def to_report(self) -> ErrorReport:
        return ErrorReport(
            error=type(self).__name__,
            message=self.message,
            exit_code=self.exit_code,
            details=self.details()
        )


class InputError(UCLabError):
    """Raised when an input value is out of range or refers to unknown elements."""
    def __init__(self, message: str = "Invalid input"):
        super().__init__(message)


class FamilyFormatError(InputError):
    """Raised when a family file cannot be parsed."""
    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)

    def details(self) -> dict:
        return {"line_number": self.line_number}


class GuardExceededError(InputError):
    """Raised when a size guard from the settings is exceeded."""
    def __init__(self, what: str, value: int, limit: int):
        self.value = value
        self.limit = limit
        super().__init__(f"{what}={value} exceeds the configured limit {limit}")

    def details(self) -> dict:
        return {"value": self.value, "limit": self.limit}


class ContractViolationError(UCLabError):
    """Raised when an operation is called outside its precondition."""
    def __init__(self, message: str = "Operation precondition violated"):
        super().__init__(message)


class NotMinimalError(ContractViolationError):
    """Raised when a reduction is requested for a set that is not minimal."""
    def __init__(self, minimal_set: int, witness: Optional[int]):
        self.minimal_set = minimal_set
        self.witness = witness
        if witness is None:
            message = f"{elements_of(minimal_set)} is not a member of the family"
        else:
            message = (
                f"{elements_of(minimal_set)} is not minimal: "
                f"{elements_of(witness)} is a strictly smaller member"
            )
        super().__init__(message)

    def details(self) -> dict:
        return {
            "minimal_set": elements_of(self.minimal_set),
            "witness": None if self.witness is None else elements_of(self.witness)
        }


class NotSeparatingError(ContractViolationError):
    """Raised when two elements produce the same index set under iota."""
    def __init__(self, pair: Tuple[int, int]):
        self.pair = pair
        super().__init__(f"elements {pair[0]} and {pair[1]} lie in exactly the same sets")

    def details(self) -> dict:
        return {"pair": list(self.pair)}


class PropertyFailure(UCLabError):
    """Raised when a checked property fails on a concrete instance."""
    exit_code = EXIT_PROPERTY_FAILED

    def __init__(self, message: str):
        super().__init__(message)


class ChainFailure(PropertyFailure):
    """Raised when a chain quotient has no element in half of its sets."""
    def __init__(self, step: int, quotient: List[List[int]]):
        self.step = step
        self.quotient = quotient
        super().__init__(f"quotient at step {step} has no half-frequency element")

    def details(self) -> dict:
        return {"step": self.step, "quotient": self.quotient}


class InvariantBreach(PropertyFailure):
    """Raised when a postcondition that must always hold fails at runtime."""
    def __init__(self, message: str, family: Optional[List[List[int]]] = None):
        self.family = family
        super().__init__(message)

    def details(self) -> dict:
        return {"family": self.family}
