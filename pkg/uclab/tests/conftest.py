"""
Shared fixtures and hypothesis strategies.
"""

from functools import lru_cache
from typing import List

import hypothesis.strategies as st
import pytest

from uclab.models.family import SetFamily
from uclab.schemas.enumeration import Constraint, EnumSpec
from uclab.services.enumeration_service import enumerate_families
from uclab.services.family_service import close_under_union, make_family
from uclab.services.suite_service import P3M1, P3M1_CHILD, P3M1_DUAL, P3M1_REDUCED, SEVEN
from uclab.utils.bitmask import full_mask


@lru_cache()
def normalized_census(n: int) -> List[SetFamily]:
    return list(enumerate_families(EnumSpec(n=n, constraints={Constraint.NORMALIZED})))


@st.composite
def union_closed_families(draw, max_n: int = 4) -> SetFamily:
    """⟨G⟩ for a few random generators over [n]; always contains ∅ and U(F)."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    generators = draw(st.lists(
        st.integers(min_value=1, max_value=full_mask(n)), min_size=1, max_size=6
    ))
    return close_under_union(generators)


def normalized_families(max_n: int = 4):
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.sampled_from(normalized_census(n))
    )


@pytest.fixture
def punctured_cube() -> SetFamily:
    """P([3]) without {1}."""
    return P3M1


@pytest.fixture
def punctured_cube_dual() -> SetFamily:
    return P3M1_DUAL


@pytest.fixture
def punctured_cube_reduced() -> SetFamily:
    return P3M1_REDUCED


@pytest.fixture
def punctured_cube_child() -> SetFamily:
    return P3M1_CHILD


@pytest.fixture
def seven_point() -> SetFamily:
    return SEVEN


@pytest.fixture
def dependent_family() -> SetFamily:
    """Element 1 lies exactly in the sets containing 2 or 3."""
    return make_family([[], [1, 2], [1, 3], [1, 2, 3]])


@pytest.fixture
def family_file(tmp_path):
    """Write a family in text form and return its path."""
    def write(text: str, name: str = "family.fam") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


@lru_cache()
def independent_census(n: int) -> List[SetFamily]:
    constraints = {Constraint.CONTAINS_EMPTY, Constraint.INDEPENDENT}
    return [f for f in enumerate_families(EnumSpec(n=n, constraints=constraints)) if len(f) >= 2]


def independent_families(max_n: int = 4):
    """Independent union-closed families with ∅, drawn from the census on [n]."""
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.sampled_from(independent_census(n))
    )
