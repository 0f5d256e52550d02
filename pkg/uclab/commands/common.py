"""
Shared helpers for command handlers: output rendering and exit codes.
"""

import argparse
from typing import Optional

from pydantic import BaseModel

from uclab.core.exceptions import EXIT_OK, EXIT_PROPERTY_FAILED
from uclab.models.family import SetFamily
from uclab.schemas.family import FamilyRead
from uclab.schemas.report import CommandResult
from uclab.services.io_service import serialize_family


def is_json(args: argparse.Namespace) -> bool:
    return args.format == "json"


def emit(
    args: argparse.Namespace,
    passed: bool = True,
    result: Optional[BaseModel] = None,
    text: Optional[str] = None
) -> None:
    """Print one result: a JSON line in json mode, the text otherwise."""
    if is_json(args):
        envelope = CommandResult(
            command=args.command,
            passed=passed,
            result=result.model_dump(mode="json") if result is not None else None
        )
        print(envelope.model_dump_json())
    elif text is not None:
        print(text, end="" if text.endswith("\n") else "\n")


def emit_family(args: argparse.Namespace, family: SetFamily, header: Optional[str] = None) -> None:
    text = serialize_family(family)
    if header:
        text = f"# {header}\n{text}"
    emit(args, result=FamilyRead.from_family(family), text=text)


def status_line(name: str, passed: bool, detail: str = "") -> str:
    line = f"{'PASS' if passed else 'FAIL'} {name}"
    return f"{line}: {detail}" if detail else line


def exit_code(passed: bool) -> int:
    return EXIT_OK if passed else EXIT_PROPERTY_FAILED
