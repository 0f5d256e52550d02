"""
Family file codec.

Text form, one member set per line:

    # comment
    universe: 1 2 3
    {}
    2
    1 2

"{}" or "-" is the empty set; the universe line is optional and defaults to
the union of the sets. A document that parses as a JSON object with a
"sets" key is read as the JSON form {"universe": [...], "sets": [[...], ...]};
anything else is read as text.
"""

import json
import logging
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import ValidationError

from uclab.core.exceptions import FamilyFormatError, InputError
from uclab.models.family import SetFamily
from uclab.models.indexed import IndexedFamily
from uclab.schemas.family import FamilyFile, FamilyRead
from uclab.utils.bitmask import MAX_LABEL, elements_of, mask_of

logger = logging.getLogger(__name__)

UNIVERSE_PREFIX = "universe:"
EMPTY_TOKENS = ("{}", "-")


def _parse_labels(tokens: List[str], line_number: Optional[int]) -> int:
    mask = 0
    for token in tokens:
        try:
            label = int(token)
        except ValueError:
            raise FamilyFormatError(f"not an element label: {token!r}", line_number)
        if label < 1 or label > MAX_LABEL:
            raise FamilyFormatError(f"element label {label} outside 1..{MAX_LABEL}", line_number)
        mask |= 1 << (label - 1)
    return mask


def _is_json(text: str) -> bool:
    try:
        document = json.loads(text)
    except ValueError:
        return False
    return isinstance(document, dict) and "sets" in document


def _parse_json(text: str) -> Tuple[Optional[int], List[int]]:
    try:
        document = FamilyFile.model_validate_json(text)
    except ValidationError as exc:
        raise FamilyFormatError(f"invalid JSON family: {exc.errors()[0]['msg']}")
    universe = None if document.universe is None else mask_of(document.universe)
    return universe, [mask_of(labels) for labels in document.sets]


def _parse_text(text: str) -> Tuple[Optional[int], List[int]]:
    universe: Optional[int] = None
    masks: List[int] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith(UNIVERSE_PREFIX):
            if universe is not None:
                raise FamilyFormatError("universe declared twice", line_number)
            universe = _parse_labels(line[len(UNIVERSE_PREFIX):].split(), line_number)
            continue
        if line in EMPTY_TOKENS:
            masks.append(0)
            continue
        masks.append(_parse_labels(line.split(), line_number))
    return universe, masks


def _parse(text: str) -> Tuple[Optional[int], List[int]]:
    return _parse_json(text) if _is_json(text) else _parse_text(text)


def parse_family(text: str) -> SetFamily:
    """
    Parse the text or JSON form of a family.

    Raises:
        FamilyFormatError: On a malformed line, a bad label or sets outside
            the declared universe
    """
    universe, masks = _parse(text)
    try:
        return SetFamily(masks, universe)
    except ValueError as exc:
        raise FamilyFormatError(str(exc))


def parse_indexed(text: str) -> IndexedFamily:
    """
    Non-empty sets in file order, labelled 1..s; used for induced indexings.

    Raises:
        FamilyFormatError: If a non-empty set is listed twice
    """
    _, masks = _parse(text)
    items = [mask for mask in masks if mask]
    if len(set(items)) != len(items):
        raise FamilyFormatError("an indexed family lists each set once")
    return IndexedFamily(items)


def serialize_family(family: SetFamily) -> str:
    """Canonical text form with an explicit universe line."""
    lines = [" ".join([UNIVERSE_PREFIX] + [str(label) for label in family.elements])]
    for mask in family:
        lines.append("{}" if mask == 0 else " ".join(str(label) for label in elements_of(mask)))
    return "\n".join(lines) + "\n"


def serialize_json(family: SetFamily) -> str:
    return FamilyRead.from_family(family).model_dump_json()


def read_family(path: str) -> SetFamily:
    """
    Read a family file.

    Raises:
        InputError: If the file cannot be read
        FamilyFormatError: If its content is malformed
    """
    return parse_family(_read_text(path))


def read_indexed(path: str) -> IndexedFamily:
    return parse_indexed(_read_text(path))


def _read_text(path: str) -> str:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise InputError(f"{path} is not UTF-8 text (byte {exc.start})") from exc
    logger.debug("read %d bytes from %s", len(text), path)
    return text


def parse_set(text: str) -> int:
    """
    Parse a set given on the command line: "1 2 3", "1,2,3", "{}" or "-".

    Raises:
        InputError: On a bad label
    """
    text = text.strip()
    if text in EMPTY_TOKENS or not text:
        return 0
    tokens = text.strip("{}").replace(",", " ").split()
    try:
        return _parse_labels(tokens, None)
    except FamilyFormatError as exc:
        raise InputError(exc.message) from exc
