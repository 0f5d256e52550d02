import random

import pytest

from uclab.core.exceptions import GuardExceededError
from uclab.schemas.enumeration import Constraint, EnumSpec
from uclab.services.canonical_service import isomorphic
from uclab.services.enumeration_service import (
    crosscheck_family,
    enumerate_families,
    iter_union_closed_nonempty,
    naive_enumerate,
    oracle_crosscheck,
    orbit_total,
    random_supratopology,
    staircase_uniqueness,
    sweep_family,
    union_closed_sweep,
    verify_descpower
)
from uclab.services.family_service import is_supratopology, make_family, power_set, staircase
from uclab.services.reduction_service import Dedup
from uclab.services.suite_service import AXIOM_EXAMPLES


def census(n, constraints=(), up_to_iso=False):
    return list(enumerate_families(EnumSpec(n=n, constraints=set(constraints), up_to_iso=up_to_iso)))


class TestUnionClosed:
    def test_small_counts(self):
        assert len(census(0)) == 2
        assert len(census(1)) == 2
        assert len(census(2)) == 8

    def test_each_family_once(self):
        families = census(3)
        assert len(set(families)) == len(families)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_matches_brute_force(self, n):
        assert set(census(n)) == set(naive_enumerate(n))

    @pytest.mark.slow
    def test_matches_brute_force_on_four_points(self):
        assert set(census(4)) == set(naive_enumerate(4))

    def test_max_sets_prunes(self):
        assert all(len(members) <= 2 for members in iter_union_closed_nonempty(3, max_sets=2))

    def test_guard(self):
        with pytest.raises(GuardExceededError):
            census(6)


class TestNormalized:
    def test_two_points(self):
        assert len(census(2, [Constraint.NORMALIZED])) == 2
        assert len(census(2, [Constraint.NORMALIZED], up_to_iso=True)) == 1

    @pytest.mark.parametrize("n", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
    def test_matches_brute_force(self, n):
        expected = set(naive_enumerate(n, [Constraint.NORMALIZED]))
        assert set(census(n, [Constraint.NORMALIZED])) == expected

    @pytest.mark.parametrize("n", [2, 3])
    def test_orbit_stabilizer(self, n):
        assert orbit_total(n) == len(census(n))
        assert orbit_total(n, [Constraint.NORMALIZED]) == len(census(n, [Constraint.NORMALIZED]))

    def test_staircase_is_the_only_independent_class(self):
        for report in staircase_uniqueness(4):
            assert report.independent == 1
            assert report.independent_is_staircase

    def test_iso_representatives_are_pairwise_distinct(self):
        classes = census(4, [Constraint.NORMALIZED], up_to_iso=True)
        for i, first in enumerate(classes):
            for second in classes[i + 1:]:
                assert not isomorphic(first, second)


class TestOracles:
    def test_random_supratopology(self):
        family = random_supratopology(5, random.Random(7))
        assert is_supratopology(family)
        assert family.elements == [1, 2, 3, 4, 5]

    @pytest.mark.parametrize("family", [power_set(3), staircase(4)] + [f for _, f, _, _, _ in AXIOM_EXAMPLES])
    def test_crosscheck_single_families(self, family):
        found, _, _ = crosscheck_family(family)
        assert found == []

    def test_crosscheck_census(self):
        report = oracle_crosscheck(3)
        assert report.passed
        assert not report.sampled
        assert report.families_checked == len(census(3, [Constraint.CONTAINS_EMPTY, Constraint.CONTAINS_UNIVERSE]))
        assert report.union_closed_checked == len(census(3))

    @pytest.mark.slow
    def test_crosscheck_four_points(self):
        assert oracle_crosscheck(4).passed

    @pytest.mark.slow
    def test_crosscheck_sampled(self):
        report = oracle_crosscheck(5, random.Random(3))
        assert report.sampled and report.passed

    def test_descendents_of_power_sets(self):
        report = verify_descpower(3, Dedup.CANONICAL)
        assert report.passed
        assert report.levels[0] == 1
        assert len(report.levels) == 8

    @pytest.mark.slow
    def test_descendents_of_four_point_power_set(self):
        assert verify_descpower(4).passed


class TestUnionClosedSweep:
    def test_counts_families_with_and_without_empty_set(self):
        report = union_closed_sweep(2)
        assert report.passed
        assert report.families_checked == 8

    def test_three_points(self):
        families = census(3)
        assert any(not family.has_empty for family in families)
        report = union_closed_sweep(3)
        assert report.passed
        assert report.families_checked == len(families)

    @pytest.mark.slow
    def test_four_points(self):
        assert union_closed_sweep(4).passed

    def test_family_without_empty_set(self):
        assert sweep_family(make_family([[1], [2], [1, 2]])) == []

    def test_guard(self):
        with pytest.raises(GuardExceededError):
            union_closed_sweep(5)
