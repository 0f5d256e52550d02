import pytest
from hypothesis import given, settings

from uclab.core.exceptions import ContractViolationError, GuardExceededError, InputError
from uclab.models.family import SetFamily
from uclab.schemas.conjectures import ChainCertificate, FranklVerdict, PoonenOutcome, SalzbornVerdict
from uclab.services.conjecture_service import (
    binomial_lemma_check,
    frankl_check,
    generalized_chain,
    is_power_set,
    poonen_equiv_probe,
    poonen_sharp_check,
    power_set_dual_profile,
    problematic_sets,
    salzborn_check,
    salzborn_transfer_check,
    tff_size_bound_holds,
    verify_chain
)
from uclab.services.family_service import make_family, power_set, staircase
from uclab.tests.conftest import normalized_families, union_closed_families


class TestFrankl:
    def test_verdicts(self, punctured_cube):
        report = frankl_check(power_set(3))
        assert (report.best, report.freq, report.total) == (1, 4, 8)
        assert report.verdict == FranklVerdict.SHARP
        assert frankl_check(punctured_cube).verdict == FranklVerdict.STRICT

    def test_failure_on_a_non_union_closed_family(self):
        report = frankl_check(make_family([[], [1], [2], [3]]))
        assert report.verdict == FranklVerdict.FAILS
        assert not report.holds

    def test_excluded(self):
        assert frankl_check(SetFamily([0])).verdict == FranklVerdict.EXCLUDED
        assert frankl_check(SetFamily()).holds

    @settings(max_examples=60, deadline=None)
    @given(family=union_closed_families())
    def test_holds_on_small_union_closed_families(self, family):
        assert frankl_check(family).holds


class TestPoonen:
    def test_sharp_check(self):
        assert poonen_sharp_check(power_set(2)) == PoonenOutcome.SHARP_AND_POWERSET
        assert poonen_sharp_check(staircase(3)) == PoonenOutcome.NOT_SHARP
        assert is_power_set(power_set(3)) and not is_power_set(staircase(2))
        with pytest.raises(ContractViolationError):
            poonen_sharp_check(SetFamily([0]))

    def test_probe_arithmetic(self):
        probe = poonen_equiv_probe(staircase(3), steps=2)
        assert (probe.final_size, probe.final_max_irreducible) == (6, 5)
        assert probe.arithmetic_holds
        assert probe.balanced is None

    def test_probe_balancing(self, seven_point, punctured_cube_dual):
        probe = poonen_equiv_probe(seven_point)
        assert probe.steps == 0
        assert probe.balanced
        with pytest.raises(InputError):
            poonen_equiv_probe(punctured_cube_dual)


class TestSalzborn:
    def test_holds_with_first_largest_witness(self, punctured_cube_dual):
        report = salzborn_check(punctured_cube_dual)
        assert report.verdict == SalzbornVerdict.HOLDS
        assert report.witness == [1, 3, 5, 6]
        assert (report.size, report.total, report.sharp) == (4, 7, False)

    def test_staircase(self):
        report = salzborn_check(staircase(3))
        assert report.witness == [1, 2, 3]
        assert report.holds

    def test_requires_normalized(self):
        with pytest.raises(ContractViolationError):
            salzborn_check(power_set(2))

    def test_transfer(self, punctured_cube, dependent_family):
        assert salzborn_transfer_check(punctured_cube)
        with pytest.raises(ContractViolationError):
            salzborn_transfer_check(dependent_family)

    @settings(max_examples=40, deadline=None)
    @given(family=normalized_families())
    def test_holds_on_small_normalized_families(self, family):
        assert salzborn_check(family).holds


class TestChain:
    def test_certificate(self, punctured_cube):
        certificate = generalized_chain(punctured_cube)
        assert certificate.chain == [[2], [1, 2], [1, 2, 3]]
        assert certificate.counts == [4, 2, 1]
        assert verify_chain(punctured_cube, certificate)

    def test_tampered_certificate(self, punctured_cube):
        forged = ChainCertificate(chain=[[2], [1, 2], [1, 2, 3]], counts=[4, 2, 2], total=7)
        assert not verify_chain(punctured_cube, forged)

    def test_excluded(self):
        with pytest.raises(ContractViolationError):
            generalized_chain(SetFamily([0]))

    @settings(max_examples=60, deadline=None)
    @given(family=union_closed_families())
    def test_certificates_verify(self, family):
        assert verify_chain(family, generalized_chain(family))

    @settings(max_examples=60, deadline=None)
    @given(family=union_closed_families())
    def test_certificates_verify_without_the_empty_set(self, family):
        without_empty = SetFamily(family.nonempty())
        assert not without_empty.has_empty
        assert verify_chain(without_empty, generalized_chain(without_empty))
        assert poonen_sharp_check(without_empty) != PoonenOutcome.SHARP_NOT_POWERSET


class TestCounting:
    def test_problematic_sets(self, punctured_cube):
        assert problematic_sets(punctured_cube, 1).to_lists() == [[2], [3], [2, 3]]
        with pytest.raises(InputError):
            problematic_sets(punctured_cube, 4)

    @settings(max_examples=60, deadline=None)
    @given(family=union_closed_families())
    def test_tff_size_bound(self, family):
        assert tff_size_bound_holds(family)

    def test_binomial_sweep(self):
        assert binomial_lemma_check(6, 30)
        with pytest.raises(InputError):
            binomial_lemma_check(5, 10)

    def test_power_set_dual_profile(self):
        profile = power_set_dual_profile(3)
        assert profile.size_classes == [[0, 1], [4, 3], [6, 3], [7, 1]]
        assert profile.irreducible_sizes == [4, 4, 4]
        assert profile.matches
        with pytest.raises(GuardExceededError):
            power_set_dual_profile(7)
