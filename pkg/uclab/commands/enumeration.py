"""
enumerate command: stream the union-closed or normalized families on [n].
"""

import argparse

from uclab.commands.common import emit_family
from uclab.schemas.enumeration import Constraint, EnumSpec
from uclab.services.enumeration_service import enumerate_families


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("enumerate", help="Enumerate families over [n]")
    parser.add_argument("--n", type=int, required=True, help="Universe size")
    parser.add_argument("--normalized", action="store_true", help="Normalized families only")
    parser.add_argument("--iso", action="store_true", help="One representative per isomorphism class")
    parser.add_argument("--constraint", action="append", default=[],
                        choices=[c.value for c in Constraint], help="Extra constraint (repeatable)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    constraints = {Constraint(value) for value in args.constraint}
    if args.normalized:
        constraints.add(Constraint.NORMALIZED)
    spec = EnumSpec(n=args.n, constraints=constraints, up_to_iso=args.iso)
    count = 0
    for family in enumerate_families(spec):
        count += 1
        emit_family(args, family, f"family {count}")
    return 0
