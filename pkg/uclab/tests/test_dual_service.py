import pytest
from hypothesis import given, settings

from uclab.core.exceptions import ContractViolationError, NotSeparatingError
from uclab.models.family import SetFamily
from uclab.models.indexed import IndexedFamily
from uclab.services.canonical_service import isomorphic
from uclab.services.dual_service import (
    a_of,
    double_dual_irreducibles,
    dual,
    dual_size_matches,
    epsilon,
    index_canonically,
    iota,
    iota_subset,
    irreducibles_dual
)
from uclab.services.family_service import is_normalized, make_family, power_set, staircase
from uclab.tests.conftest import normalized_families, union_closed_families
from uclab.utils.bitmask import bit, mask_of


def test_punctured_cube_dual(punctured_cube, punctured_cube_dual):
    assert dual(punctured_cube) == punctured_cube_dual
    assert a_of(punctured_cube_dual) == 6


def test_iota_is_an_involution_on_items(punctured_cube):
    indexed = index_canonically(punctured_cube)
    images = iota(indexed)
    assert images.to_lists() == [[3, 4, 6], [1, 3, 5, 6], [2, 4, 5, 6]]
    assert images.labels == (1, 2, 3)
    assert iota(images) == indexed


def test_iota_subset(punctured_cube):
    indexed = index_canonically(punctured_cube)
    assert iota_subset(indexed, bit(1)) == mask_of([3, 4, 6])


def test_iota_rejects_non_separating_items():
    with pytest.raises(NotSeparatingError) as exc_info:
        iota(IndexedFamily([mask_of([1, 2])]))
    assert exc_info.value.pair == (1, 2)


def test_induced_indexing(punctured_cube):
    reordered = IndexedFamily(reversed(punctured_cube.nonempty()))
    assert isomorphic(dual(punctured_cube, reordered), dual(punctured_cube))
    with pytest.raises(ContractViolationError):
        dual(punctured_cube, IndexedFamily([bit(1)]))


def test_degenerate_duals():
    assert dual(SetFamily()) == SetFamily([0])
    assert dual(SetFamily([0])) == SetFamily([0])
    assert epsilon(SetFamily([0])) == 1 and epsilon(make_family([[1]])) == 0


def test_a_of_requires_normalized():
    assert a_of(staircase(3)) == 1
    with pytest.raises(ContractViolationError):
        a_of(power_set(2))


def test_double_dual_of_irreducibles(seven_point):
    indexed, rebuilt = irreducibles_dual(seven_point)
    assert indexed.to_lists() == [[2], [3], [1], [1, 2], [1, 3], [1, 2, 3], [2, 3]]
    assert rebuilt == power_set(3)
    assert double_dual_irreducibles(seven_point) == seven_point


@settings(max_examples=60, deadline=None)
@given(family=union_closed_families())
def test_dual_size_and_normalization(family):
    assert dual_size_matches(family)
    assert is_normalized(dual(family))


@settings(max_examples=40, deadline=None)
@given(family=normalized_families())
def test_double_dual_identity(family):
    assert double_dual_irreducibles(family) == family


def test_double_dual_is_the_plain_dual_of_the_irreducible_dual(seven_point):
    _, first = irreducibles_dual(seven_point)
    assert isomorphic(dual(first), seven_point)
    assert double_dual_irreducibles(seven_point) == seven_point
    assert double_dual_irreducibles(staircase(4)) == staircase(4)
