"""
reduce and child commands.
All logic is delegated to reduction_service.
"""

import argparse

from uclab.commands.common import emit, emit_family
from uclab.schemas.reduction import ReductionStepRead
from uclab.services.family_service import minimal_sets, require_normalized
from uclab.services.io_service import parse_set, read_family, serialize_family
from uclab.services.reduction_service import child_step, reduction_step
from uclab.utils.bitmask import format_set


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("reduce", help="Reduce a normalized family by a minimal set")
    parser.add_argument("file", help="Normalized family file")
    parser.add_argument("--minimal", help='Minimal set to remove, e.g. "3 4 6"')
    parser.set_defaults(handler=run_reduce)

    parser = subparsers.add_parser("child", help="Print the child of a union-closed family")
    parser.add_argument("file", help="Union-closed family file")
    parser.add_argument("--minimal", help="Minimal set of the dual family to remove")
    parser.set_defaults(handler=run_child)


def run_reduce(args: argparse.Namespace) -> int:
    family = read_family(args.file)
    require_normalized(family, "reduce")
    minimal_set = parse_set(args.minimal) if args.minimal is not None else minimal_sets(family)[0]
    step = reduction_step(family, minimal_set)
    text = f"# removed {format_set(step.minimal_set)}, a = {step.a}\n{serialize_family(step.result)}"
    emit(args, result=ReductionStepRead.from_step(step), text=text)
    return 0


def run_child(args: argparse.Namespace) -> int:
    family = read_family(args.file)
    minimal_set = parse_set(args.minimal) if args.minimal is not None else None
    result = child_step(family, minimal_set)
    header = f"dual-side minimal set {format_set(result.step.minimal_set)}"
    if result.adjoined_empty:
        header += "; ∅ adjoined to the input"
    emit_family(args, result.family, header)
    return 0
