# Models module initialization

from uclab.models.family import SetFamily
from uclab.models.indexed import IndexedFamily
from uclab.models.reduction import ReductionStep, DescendentNode

__all__ = [
    "SetFamily",
    "IndexedFamily",
    "ReductionStep",
    "DescendentNode"
]
