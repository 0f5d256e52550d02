"""
paper-suite command: reproduce the catalogue of worked examples.
"""

import argparse

from uclab.commands.common import emit, exit_code, status_line
from uclab.services.suite_service import run_suite


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("paper-suite", help="Run the worked-example regression suite")
    parser.add_argument("--filter", dest="name_filter", help="Run items whose name contains this text")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    passed = True
    for item in run_suite(args.name_filter):
        passed &= item.passed
        text = status_line(item.name, item.passed, item.detail)
        if item.notes:
            text += "".join(f"\n  note: {note}" for note in item.notes)
        emit(args, passed=item.passed, result=item, text=text)
    return exit_code(passed)
