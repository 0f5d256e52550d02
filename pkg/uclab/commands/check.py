"""
check command: structural predicates, separation axioms and conjecture verdicts.
All logic is delegated to the family, axiom and conjecture services.
"""

import argparse

from uclab.commands.common import emit, exit_code, status_line
from uclab.services.axiom_service import axiom_profile
from uclab.services.conjecture_service import frankl_check, salzborn_check
from uclab.services.family_service import predicates
from uclab.services.io_service import read_family


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("check", help="Check predicates, axioms and conjectures")
    parser.add_argument("file", help="Family file")
    parser.add_argument("--axioms", action="store_true", help="Decide the eleven separation axioms")
    parser.add_argument("--frankl", action="store_true", help="Frankl verdict")
    parser.add_argument("--salzborn", action="store_true", help="Salzborn verdict (normalized input)")
    parser.add_argument("--naive", action="store_true",
                        help="Decide axioms by literal definition instead of the fast procedures")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    """
    Print the predicates, then each requested check.

    Axiom verdicts classify the space and never fail the command; a failing
    Frankl or Salzborn verdict does.
    """
    family = read_family(args.file)
    passed = True

    summary = predicates(family)
    emit(args, result=summary, text="\n".join(
        f"{name}: {value}" for name, value in summary.model_dump().items()
    ))

    if args.axioms or args.naive:
        profile = axiom_profile(family, naive=args.naive)
        lines = []
        for verdict in profile.verdicts:
            detail = ""
            if verdict.witness is not None:
                detail = verdict.witness.model_dump_json(exclude_none=True)
            lines.append(f"{verdict.axiom.value:<4} {'holds' if verdict.holds else 'fails'} {detail}".rstrip())
        emit(args, result=profile, text="\n".join(lines))

    if args.frankl:
        report = frankl_check(family)
        passed &= report.holds
        emit(args, passed=report.holds, result=report, text=status_line(
            "frankl", report.holds,
            f"{report.verdict.value}, element {report.best} in {report.freq} of {report.total}"
        ))

    if args.salzborn:
        report = salzborn_check(family)
        passed &= report.holds
        emit(args, passed=report.holds, result=report, text=status_line(
            "salzborn", report.holds,
            f"{report.verdict.value}, irreducible {report.witness} of size {report.size} in {report.total}"
        ))

    return exit_code(passed)
