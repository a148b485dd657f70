import math

import pytest
from hypothesis import assume, given, strategies as st

from oracle import semigroup_members
from curvemilnor.errors import ConductorNotCertified, NotClosed, NotNumerical
from curvemilnor.semigroup import NumericalSemigroup

gens_st = st.lists(st.integers(2, 15), min_size=1, max_size=4)


def test_known_semigroups():
    s = NumericalSemigroup.from_generators([2, 5])
    assert s.small_values == (0, 2) and s.conductor == 4
    s34 = NumericalSemigroup.from_generators([3, 4])
    assert s34.gaps() == [1, 2, 5] and s34.genus == 3
    s35 = NumericalSemigroup.from_generators([3, 5])
    assert s35.gaps() == [1, 2, 4, 7] and s35.is_symmetric()
    assert NumericalSemigroup.from_generators([4, 6, 13]).conductor == 16
    assert NumericalSemigroup.from_generators([1]).equals(NumericalSemigroup.naturals())


def test_text_and_json():
    s = NumericalSemigroup.from_generators([3, 5])
    assert s.to_text() == "gamma = {0,3,5,6} + 8•N"
    assert s.to_json() == "[0,3,5,6,8]"
    assert NumericalSemigroup.from_json_obj([0, 3, 5, 6, 8]).equals(s)
    assert NumericalSemigroup.naturals().to_json_obj() == [0]


def test_errors():
    with pytest.raises(NotNumerical):
        NumericalSemigroup.from_generators([4, 6])
    with pytest.raises(NotClosed):
        NumericalSemigroup.from_value_set({0, 3, 4, 5, 8, 9, 10, 11, 12}, 12)
    with pytest.raises(ConductorNotCertified):
        NumericalSemigroup.from_value_set({0, 3, 6, 7}, 7)


def test_non_symmetric():
    assert not NumericalSemigroup.from_generators([3, 4, 5]).is_symmetric()


@given(gens_st)
def test_matches_dynamic_programming(gens):
    assume(math.gcd(*gens) == 1)
    s = NumericalSemigroup.from_generators(gens)
    bound = s.conductor + max(gens) + 5
    assert [n for n in range(bound) if s.contains(n)] == semigroup_members(gens, bound)
    # conductor is minimal
    assert s.conductor == 0 or not s.contains(s.conductor - 1)


@given(gens_st)
def test_minimal_generators_regenerate(gens):
    assume(math.gcd(*gens) == 1)
    s = NumericalSemigroup.from_generators(gens)
    mg = s.minimal_generators()
    assert set(mg) <= set(gens) | set(range(s.conductor + s.min_nonzero() + 1))
    assert NumericalSemigroup.from_generators(mg).equals(s)
    assert min(mg) == s.min_nonzero()


@given(gens_st)
def test_genus_bounds_and_symmetry(gens):
    assume(math.gcd(*gens) == 1)
    s = NumericalSemigroup.from_generators(gens)
    # c <= 2g with equality exactly for symmetric semigroups
    assert s.conductor <= 2 * s.genus or s.conductor == 0
    assert s.is_symmetric() == (s.conductor == 2 * s.genus)


@given(gens_st)
def test_value_set_roundtrip(gens):
    assume(math.gcd(*gens) == 1)
    s = NumericalSemigroup.from_generators(gens)
    top = s.conductor + s.min_nonzero() + 2
    again = NumericalSemigroup.from_value_set({n for n in range(top + 1) if s.contains(n)}, top)
    assert again.equals(s)


@given(st.integers(2, 12), st.integers(2, 12))
def test_two_generator_formulas(a, b):
    assume(math.gcd(a, b) == 1)
    s = NumericalSemigroup.from_generators([a, b])
    assert s.conductor == (a - 1) * (b - 1)
    assert s.is_symmetric()
