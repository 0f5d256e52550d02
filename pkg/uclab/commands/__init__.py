# Commands module initialization

from uclab.commands import chain, check, descend, dual, enumeration, suite, reduce, verify

COMMANDS = [check, dual, reduce, descend, enumeration, chain, suite, verify]

__all__ = ["COMMANDS"]
