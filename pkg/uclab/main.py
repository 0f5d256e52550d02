"""
uclab command-line application.

Assembles the subcommand parsers and dispatches to their handlers. Domain
errors are reported on stderr and mapped to exit codes:

* **0**: every checked property holds
* **1**: a checked property fails
* **2**: input or usage error
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from uclab.commands import COMMANDS
from uclab.core.config import get_settings
from uclab.core.exceptions import InputError, UCLabError
from uclab.core.logging import configure_logging

logger = logging.getLogger("uclab")
settings = get_settings()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uclab",
        description="Exact computations on finite union-closed set families."
    )
    parser.add_argument("--format", choices=["text", "json"], default=settings.OUTPUT_FORMAT,
                        help="text, or one JSON object per result line")
    parser.add_argument("--log-level", default=None, help="Override the LOG_LEVEL setting")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except ValidationError as exc:
        error = exc.errors()[0]
        field = ".".join(str(part) for part in error["loc"])
        return _report(args, InputError(f"{field}: {error['msg']}" if field else error["msg"]))
    except UCLabError as exc:
        return _report(args, exc)


def _report(args: argparse.Namespace, exc: UCLabError) -> int:
    logger.debug("%s failed: %s", args.command, exc.message)
    report = exc.to_report()
    if args.format == "json":
        print(report.model_dump_json(), file=sys.stderr)
    else:
        print(f"error: {report.message}", file=sys.stderr)
    return exc.exit_code
