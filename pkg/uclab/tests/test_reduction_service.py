import pytest
from hypothesis import given, settings

from uclab.core.exceptions import ContractViolationError, InputError, NotMinimalError
from uclab.models.family import SetFamily
from uclab.models.indexed import IndexedFamily
from uclab.services.canonical_service import isomorphic
from uclab.services.dual_service import dual, dual_indexed
from uclab.services.family_service import (
    is_independent,
    is_normalized,
    make_family,
    max_frequency,
    minimal_sets,
    power_set,
    staircase
)
from uclab.services.reduction_service import (
    Branch,
    Dedup,
    child,
    child_step,
    descendents,
    diagram_failures,
    eliminate_dependence,
    force_reduce,
    frequency_corollary_check,
    iter_children,
    parity_remark_holds,
    reduce_normalized,
    reduction_step,
    size_class_corollary_check,
    size_class_decomposition,
    trivial_parent_independent,
    trivial_parent_normalized
)
from uclab.services.suite_service import REMOVAL, REMOVAL_FORCED
from uclab.tests.conftest import independent_families, normalized_families
from uclab.utils.bitmask import mask_of


class TestReduction:
    def test_reduce_by_minimal_set(self, punctured_cube_dual, punctured_cube_reduced):
        step = reduction_step(punctured_cube_dual, mask_of([3, 4, 6]))
        assert step.a == 6
        assert step.result == punctured_cube_reduced

    def test_non_minimal_set_is_rejected_with_witness(self):
        with pytest.raises(NotMinimalError) as exc_info:
            reduce_normalized(REMOVAL, mask_of([1, 3, 4, 5, 6, 7]))
        assert exc_info.value.witness == mask_of([5, 7])

    def test_non_member_is_rejected(self, punctured_cube_dual):
        with pytest.raises(NotMinimalError) as exc_info:
            reduce_normalized(punctured_cube_dual, mask_of([1]))
        assert exc_info.value.witness is None

    def test_forced_removal_breaks_separation(self):
        forced = force_reduce(REMOVAL, mask_of([1, 3, 4, 5, 6, 7]))
        assert forced == REMOVAL_FORCED
        rows = forced.membership()
        assert rows[2] == rows[4]
        assert not is_normalized(forced)

    def test_requires_normalized(self):
        with pytest.raises(ContractViolationError):
            reduce_normalized(power_set(2), mask_of([1]))
        with pytest.raises(ContractViolationError):
            reduce_normalized(SetFamily([0]), 0)

    @settings(max_examples=40, deadline=None)
    @given(family=normalized_families())
    def test_every_minimal_set_reduces(self, family):
        for minimal_set in minimal_sets(family):
            result = reduce_normalized(family, minimal_set)
            assert is_normalized(result)
            assert len(result) == len(family) - 1

    @settings(max_examples=40, deadline=None)
    @given(family=normalized_families())
    def test_corollaries(self, family):
        assert frequency_corollary_check(family)
        assert size_class_corollary_check(family)

    def test_size_classes(self, punctured_cube_dual):
        assert size_class_decomposition(punctured_cube_dual) == [(0, 1), (3, 1), (4, 2), (5, 2), (6, 1)]


class TestChild:
    def test_child(self, punctured_cube, punctured_cube_child, punctured_cube_reduced):
        result = child_step(punctured_cube)
        assert result.step.minimal_set == mask_of([3, 4, 6])
        assert result.step.result == punctured_cube_reduced
        assert result.family == punctured_cube_child
        assert not result.adjoined_empty

    def test_induced_indexing_reproduces_reduced_dual(self, punctured_cube):
        for result in iter_children(punctured_cube):
            assert dual_indexed(result.indexed) == result.step.result
            assert len(result.family) == len(punctured_cube) - 1

    def test_empty_set_is_adjoined(self, punctured_cube, punctured_cube_child):
        without_empty = SetFamily(punctured_cube.nonempty())
        result = child_step(without_empty)
        assert result.adjoined_empty
        assert result.family == punctured_cube_child

    def test_given_minimal_set_must_be_minimal_in_dual(self, punctured_cube):
        with pytest.raises(NotMinimalError):
            child(punctured_cube, mask_of([1, 3, 4, 5, 6]))

    def test_parity_remark(self, punctured_cube, punctured_cube_child):
        assert parity_remark_holds(punctured_cube, punctured_cube_child)
        assert parity_remark_holds(power_set(2), child(power_set(2)))


class TestDescendents:
    def test_first_branch_follows_size_law(self, punctured_cube):
        nodes = descendents(punctured_cube, 2)
        assert [len(node.family) for node in nodes] == [7, 6, 5]
        assert [node.depth for node in nodes] == [0, 1, 2]

    def test_all_branches_with_and_without_dedup(self):
        assert len(descendents(power_set(2), 2, Branch.ALL)) == 5
        assert len(descendents(power_set(2), 2, Branch.ALL, Dedup.CANONICAL)) == 3

    def test_depth_range(self, punctured_cube):
        with pytest.raises(ContractViolationError):
            descendents(punctured_cube, len(punctured_cube))
        with pytest.raises(ContractViolationError):
            descendents(punctured_cube, -1)


class TestTrivialParents:
    def test_normalized_parent(self):
        parent = trivial_parent_normalized(staircase(2))
        assert parent == make_family([[], [3], [1, 3], [1, 2, 3]])
        assert is_normalized(parent)

    def test_parent_label_cap(self):
        with pytest.raises(InputError):
            trivial_parent_normalized(staircase(64))

    @pytest.mark.parametrize("family", [power_set(2), staircase(3), make_family(
        [[], [2], [3], [1, 2], [1, 3], [2, 3], [1, 2, 3]]
    )])
    def test_child_of_independent_parent(self, family):
        assert isomorphic(child(trivial_parent_independent(family)), family)

    def test_independent_parent_requires_independence(self, dependent_family):
        with pytest.raises(ContractViolationError):
            trivial_parent_independent(dependent_family)


class TestDependence:
    def test_eliminate_dependence(self, dependent_family):
        reduced, removed = eliminate_dependence(dependent_family)
        assert removed == [1]
        assert reduced == make_family([[], [2], [3], [2, 3]])
        assert is_independent(reduced)
        assert len(reduced) == len(dependent_family)
        assert max_frequency(dependent_family)[1] >= max_frequency(reduced)[1]


class TestDiagram:
    def test_second_child_under_induced_indexing(self, punctured_cube):
        first = child_step(punctured_cube)
        reduced = reduce_normalized(dual(punctured_cube), first.step.minimal_set)
        minimal_set = minimal_sets(reduced)[0]
        second = child_step(first.family, minimal_set, first.indexed)
        assert second.step.parent == reduced
        assert dual(second.family, second.indexed) == reduce_normalized(reduced, minimal_set)
        assert len(second.family) == len(punctured_cube) - 2

    def test_indexing_must_list_the_family(self, punctured_cube):
        with pytest.raises(ContractViolationError):
            child_step(punctured_cube, indexed=IndexedFamily([mask_of([2])]))

    def test_commutes_on_the_punctured_cube(self, punctured_cube):
        assert diagram_failures(punctured_cube) == []
        assert diagram_failures(SetFamily(punctured_cube.nonempty())) == []

    @pytest.mark.parametrize("family", [power_set(3), staircase(5)])
    def test_commutes_on_every_path(self, family):
        assert diagram_failures(family, depth=3) == []

    def test_depth_is_capped_by_family_size(self):
        assert diagram_failures(power_set(1), depth=3) == []

    @settings(max_examples=40, deadline=None)
    @given(family=independent_families())
    def test_commutes_on_independent_families(self, family):
        assert diagram_failures(family, depth=3) == []
