"""
dual command: the dual family under the canonical or the file's own indexing.
"""

import argparse

from uclab.commands.common import emit_family
from uclab.services.dual_service import dual
from uclab.services.io_service import read_family, read_indexed


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("dual", help="Print the dual family")
    parser.add_argument("file", help="Family file")
    parser.add_argument("--indexing", choices=["canonical", "induced"], default="canonical",
                        help="canonical order, or the order of the sets in the file")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    family = read_family(args.file)
    indexed = read_indexed(args.file) if args.indexing == "induced" else None
    emit_family(args, dual(family, indexed))
    return 0
