# Utils module initialization

from uclab.utils.bitmask import (
    MAX_LABEL,
    bit,
    mask_of,
    full_mask,
    popcount,
    set_key,
    iter_labels,
    elements_of,
    max_label,
    iter_submasks,
    is_subset,
    format_set
)

__all__ = [
    "MAX_LABEL",
    "bit",
    "mask_of",
    "full_mask",
    "popcount",
    "set_key",
    "iter_labels",
    "elements_of",
    "max_label",
    "iter_submasks",
    "is_subset",
    "format_set"
]
