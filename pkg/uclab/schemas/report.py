"""
Pydantic schemas for command output records.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class ErrorReport(BaseModel):
    """Schema for a domain error surfaced by the CLI."""
    error: str
    message: str
    exit_code: int
    details: Dict[str, Any] = Field(default_factory=dict)


class SuiteItemResult(BaseModel):
    """One reproduced item of the regression suite."""
    name: str
    passed: bool
    detail: str = ""
    notes: List[str] = Field(default_factory=list)


class CommandResult(BaseModel):
    """Generic envelope for one result line in machine-readable mode."""
    command: str
    passed: bool = True
    result: Optional[Dict[str, Any]] = None
