"""
chain command: the generalized-k chain certificate of a union-closed family.
"""

import argparse

from uclab.commands.common import emit, exit_code, status_line
from uclab.services.conjecture_service import generalized_chain, verify_chain
from uclab.services.io_service import read_family


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("chain", help="Build and verify a chain certificate")
    parser.add_argument("file", help="Union-closed family file")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    family = read_family(args.file)
    certificate = generalized_chain(family)
    passed = verify_chain(family, certificate)
    lines = [
        f"{step} {' '.join(map(str, labels))}: {count}"
        for step, (labels, count) in enumerate(zip(certificate.chain, certificate.counts), start=1)
    ]
    lines.append(status_line("chain", passed, f"{len(certificate.chain)} steps over {certificate.total} sets"))
    emit(args, passed=passed, result=certificate, text="\n".join(lines))
    return exit_code(passed)
