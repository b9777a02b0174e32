from hypothesis import given
from hypothesis import strategies as st

from services.poset_core import (
    is_atomistic, is_boolean, is_ssc, is_uniquely_complemented, is_wssc, lower_cone, upper_cone,
)
from tests.property.settings import ACCEPTANCE_SETTINGS
from tests.property.strategies import bounded_posets, posets


@st.composite
def poset_with_nested_sets(draw):
    P = draw(posets())
    B = draw(st.sets(st.integers(0, P.size - 1)))
    A = draw(st.sets(st.sampled_from(sorted(B)))) if B else set()
    return P, A, B


@given(poset_with_nested_sets())
@ACCEPTANCE_SETTINGS
def test_cones_reverse_inclusion(case):
    P, A, B = case
    assert set(upper_cone(P, B)) <= set(upper_cone(P, A))
    assert set(lower_cone(P, B)) <= set(lower_cone(P, A))


@given(poset_with_nested_sets())
@ACCEPTANCE_SETTINGS
def test_cone_closures(case):
    P, A, _ = case
    upper = upper_cone(P, A)
    lower = lower_cone(P, A)
    assert set(A) <= set(lower_cone(P, upper))
    assert set(A) <= set(upper_cone(P, lower))
    assert upper_cone(P, lower_cone(P, upper)) == upper
    assert lower_cone(P, upper_cone(P, lower)) == lower


@given(bounded_posets())
@ACCEPTANCE_SETTINGS
def test_atomistic_matches_section_semicomplemented(P):
    assert is_atomistic(P) == is_ssc(P)


@given(bounded_posets())
@ACCEPTANCE_SETTINGS
def test_ssc_implies_wssc(P):
    if is_ssc(P):
        assert is_wssc(P)


@given(bounded_posets())
@ACCEPTANCE_SETTINGS
def test_boolean_implies_ssc(P):
    if is_boolean(P):
        assert is_ssc(P)


@given(bounded_posets())
@ACCEPTANCE_SETTINGS
def test_uniquely_complemented_implies_wssc(P):
    if is_uniquely_complemented(P):
        assert is_wssc(P)
