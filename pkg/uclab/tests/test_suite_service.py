import pytest

from uclab.core.exceptions import InputError
from uclab.services.suite_service import CATALOGUE, run_suite


def test_every_item_passes():
    results = run_suite()
    assert [r.name for r in results] == list(CATALOGUE)
    failed = [(r.name, r.detail) for r in results if not r.passed]
    assert failed == []


def test_filter_selects_by_substring():
    results = run_suite("axioms-")
    assert results and all(r.name.startswith("axioms-") for r in results)


def test_five_point_item_carries_note():
    (result,) = run_suite("axioms-five-point-not-t0")
    assert result.passed
    assert any("TUD" in note for note in result.notes)


def test_unknown_filter():
    with pytest.raises(InputError):
        run_suite("no-such-item")
