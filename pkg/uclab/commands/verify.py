"""
verify command: census-wide oracle runs.
"""

import argparse

from uclab.commands.common import emit, exit_code, status_line
from uclab.services.enumeration_service import (
    oracle_crosscheck,
    staircase_uniqueness,
    verify_descpower
)
from uclab.services.reduction_service import Dedup


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="Run an oracle over a whole census")
    targets = parser.add_subparsers(dest="target", required=True)

    crosscheck = targets.add_parser("crosscheck", help="Fast routines against brute force")
    crosscheck.add_argument("--n", type=int, required=True)
    crosscheck.set_defaults(handler=run_crosscheck)

    descpower = targets.add_parser("descpower", help="Every descendent of the power set")
    descpower.add_argument("--n", type=int, required=True)
    descpower.add_argument("--dedup", choices=["iso", "eq"], default="iso")
    descpower.set_defaults(handler=run_descpower)

    stairs = targets.add_parser("staircase", help="Independent normalized classes up to n")
    stairs.add_argument("--n", type=int, required=True)
    stairs.set_defaults(handler=run_staircase)


def run_crosscheck(args: argparse.Namespace) -> int:
    report = oracle_crosscheck(args.n)
    lines = [f"{d.check}: {d.family} {d.detail}".rstrip() for d in report.discrepancies]
    lines.append(status_line(
        "crosscheck", report.passed,
        f"{report.families_checked} families, {report.normalized_checked} normalized, "
        f"{report.independent_checked} independent, {report.union_closed_checked} union-closed"
        f"{' (sampled)' if report.sampled else ''}"
    ))
    emit(args, passed=report.passed, result=report, text="\n".join(lines))
    return exit_code(report.passed)


def run_descpower(args: argparse.Namespace) -> int:
    dedup = Dedup.CANONICAL if args.dedup == "iso" else Dedup.EQUALITY
    report = verify_descpower(args.n, dedup)
    text = status_line("descpower", report.passed, f"{report.nodes} nodes, levels {report.levels}")
    emit(args, passed=report.passed, result=report, text=text)
    return exit_code(report.passed)


def run_staircase(args: argparse.Namespace) -> int:
    passed = True
    for report in staircase_uniqueness(args.n):
        ok = report.independent == 1 and report.independent_is_staircase
        passed &= ok
        emit(args, passed=ok, result=report, text=status_line(
            f"staircase n={report.n}", ok,
            f"{report.independent} independent of {report.classes} classes"
        ))
    return exit_code(passed)
