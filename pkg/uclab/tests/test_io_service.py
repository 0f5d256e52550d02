import pytest

from uclab.core.exceptions import FamilyFormatError, InputError
from uclab.models.family import SetFamily
from uclab.services.family_service import make_family, staircase
from uclab.services.io_service import (
    parse_family,
    parse_indexed,
    parse_set,
    read_family,
    serialize_family,
    serialize_json
)
from uclab.utils.bitmask import mask_of


def test_text_form_with_universe():
    family = parse_family("universe: 1 2 3\n{}\n2\n1 2\n")
    assert family == SetFamily([0, mask_of([2]), mask_of([1, 2])], universe=mask_of([1, 2, 3]))
    assert family.elements == [1, 2, 3]


def test_comments_and_empty_tokens():
    family = parse_family("# staircase\n-\n1  # first\n\n1 2\n")
    assert family == staircase(2)


def test_json_form():
    assert parse_family('{"universe": [1, 2], "sets": [[], [1], [1, 2]]}') == staircase(2)


def test_serializer_is_canonical():
    text = serialize_family(parse_family("1 2\n{}\n2\n"))
    assert text == "universe: 1 2\n{}\n2\n1 2\n"
    assert parse_family(text) == parse_family("1 2\n{}\n2\n")


def test_json_serializer():
    assert serialize_json(staircase(2)) == '{"universe":[1,2],"sets":[[],[1],[1,2]]}'


@pytest.mark.parametrize("text,line", [
    ("{}\n1 x\n", 2),
    ("1\n65\n", 2),
    ("universe: 1\nuniverse: 1\n", 2),
])
def test_malformed_lines_report_line_numbers(text, line):
    with pytest.raises(FamilyFormatError) as exc_info:
        parse_family(text)
    assert exc_info.value.line_number == line


def test_sets_outside_declared_universe():
    with pytest.raises(FamilyFormatError):
        parse_family("universe: 1\n1 2\n")


def test_invalid_json():
    with pytest.raises(FamilyFormatError):
        parse_family('{"sets": [[0]]}')


def test_indexed_keeps_file_order():
    indexed = parse_indexed("{}\n1 2\n1\n")
    assert indexed.to_lists() == [[1, 2], [1]]
    with pytest.raises(FamilyFormatError):
        parse_indexed("1\n1\n")


def test_parse_set():
    assert parse_set("3 4 6") == mask_of([3, 4, 6])
    assert parse_set("3,4,6") == mask_of([3, 4, 6])
    assert parse_set("{}") == 0
    with pytest.raises(InputError):
        parse_set("0")


def test_read_family(family_file):
    assert read_family(family_file("{}\n1\n")) == make_family([[], [1]])
    with pytest.raises(InputError):
        read_family(family_file("", name="present.fam") + ".missing")


def test_text_with_quotes_in_comments_is_not_json():
    family = parse_family('{}  # the "empty" set\n1\n')
    assert family == make_family([[], [1]])


def test_lone_empty_set_is_text():
    assert parse_family("{}\n") == SetFamily([0])


def test_unparseable_json_falls_back_to_text_errors():
    with pytest.raises(FamilyFormatError):
        parse_family('{"sets": [[1]')
