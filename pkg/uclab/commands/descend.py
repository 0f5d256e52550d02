"""
descend command: the descendent tree of a union-closed family.
"""

import argparse

from uclab.commands.common import emit
from uclab.schemas.reduction import DescendentNodeRead
from uclab.services.io_service import read_family, serialize_family
from uclab.services.reduction_service import Branch, Dedup, descendents
from uclab.utils.bitmask import format_set

DEDUP_MODES = {
    "none": Dedup.NONE,
    "iso": Dedup.CANONICAL,
    "eq": Dedup.EQUALITY,
}


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("descend", help="Explore descendents level by level")
    parser.add_argument("file", help="Union-closed family file")
    parser.add_argument("--depth", type=int, required=True, help="Number of child steps")
    parser.add_argument("--all", action="store_true", help="Follow every minimal-set choice")
    parser.add_argument("--dedup", choices=sorted(DEDUP_MODES), default="none",
                        help="Merge isomorphic (iso) or equal (eq) siblings")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    family = read_family(args.file)
    nodes = descendents(
        family,
        args.depth,
        branch=Branch.ALL if args.all else Branch.FIRST,
        dedup=DEDUP_MODES[args.dedup]
    )
    for node in nodes:
        lineage = " ".join(format_set(step.minimal_set) for step in node.lineage) or "root"
        text = f"# depth {node.depth}: {lineage}\n{serialize_family(node.family)}"
        emit(args, result=DescendentNodeRead.from_node(node), text=text)
    return 0
