import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from uclab.services.canonical_service import automorphism_count, canonical_form, isomorphic
from uclab.services.family_service import binom_at_least, make_family, power_set, relabel, staircase
from uclab.tests.conftest import union_closed_families


def test_isomorphic_relabelings_share_a_form():
    first = make_family([[], [1], [1, 2]])
    second = make_family([[], [2], [1, 2]])
    assert canonical_form(first) == canonical_form(second)
    assert isomorphic(first, second)


def test_same_size_different_shape():
    assert not isomorphic(staircase(3), make_family([[], [1], [2], [1, 2, 3]]))


def test_automorphism_counts():
    assert automorphism_count(power_set(3)) == 6
    assert automorphism_count(staircase(3)) == 1
    assert automorphism_count(binom_at_least(4, 2)) == 24


@settings(max_examples=50, deadline=None)
@given(family=union_closed_families(), data=st.data())
def test_form_is_invariant_under_permutation(family, data):
    elements = family.elements
    image = data.draw(st.permutations(elements))
    permuted = relabel(family, dict(zip(elements, image)))
    assert canonical_form(permuted) == canonical_form(family)


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@given(family=union_closed_families(max_n=5), data=st.data())
def test_form_is_invariant_under_permutation_thoroughly(family, data):
    elements = family.elements
    image = data.draw(st.permutations(elements))
    permuted = relabel(family, dict(zip(elements, image)))
    assert canonical_form(permuted) == canonical_form(family)
    assert isomorphic(permuted, family)
