import itertools

import pytest
from hypothesis import given, strategies as st

from curvemilnor.errors import ConductorMismatch, DimensionMismatch, NotUnique
from curvemilnor.semigroup import NumericalSemigroup
from curvemilnor.valuesemigroup import DeltaSet, ValueSemigroup


def a_odd(n):
    g = (n + 1, n + 1)
    return ValueSemigroup.from_predicate(2, g, lambda v: v[0] == v[1] or (v[0] >= g[0] and v[1] >= g[1]))


def e7():
    return ValueSemigroup.from_predicate(
        2, (3, 5), lambda v: v[1] == 2 * v[0] or (v[0] > 1 and v[1] == 3) or (v[0] >= 3 and v[1] >= 5))


def test_a3_shape():
    nu = a_odd(1)
    assert nu.gamma == (2, 2)
    assert nu.contains((1, 1)) and not nu.contains((1, 2)) and nu.contains((7, 9))
    assert nu.minimal_nonzero() == (1, 1)
    assert nu.sum_image().equals(NumericalSemigroup((0, 2), 4))
    assert not nu.validate()


def test_predicate_shrinks_to_minimal_conductor():
    nu = ValueSemigroup.from_predicate(2, (6, 6), lambda v: v == (0, 0) or (v[0] >= 1 and v[1] >= 1))
    assert nu.gamma == (1, 1)


def test_e7_sum_and_symmetry():
    nu = e7()
    assert nu.gamma == (3, 5)
    assert nu.sum_image().to_text() == "gamma = {0,3} + 5•N"
    assert nu.gorenstein_symmetry((3, 5))
    with pytest.raises(ConductorMismatch):
        nu.gorenstein_symmetry((5, 3))


def test_axes_not_symmetric():
    axes = ValueSemigroup.from_predicate(3, (1, 1, 1), lambda v: not any(v) or all(v))
    assert axes.gamma == (1, 1, 1)
    assert not axes.gorenstein_symmetry((1, 1, 1))
    assert not axes.validate()


def test_projection():
    nu = e7()
    assert nu.project([1]).equals(ValueSemigroup.from_numerical(NumericalSemigroup.from_generators([2, 3])))
    with pytest.raises(DimensionMismatch):
        nu.project([2])


def test_permutation_and_canonical():
    nu = e7()
    sw = nu.permuted([1, 0])
    assert sw.gamma == (5, 3)
    assert not sw.equals(nu) and sw.equals(nu, up_to_permutation=True)
    assert sw.canonical().to_json() == nu.canonical().to_json()


def test_json_roundtrip():
    nu = e7()
    assert ValueSemigroup.from_json_obj(nu.to_json_obj()).equals(nu)
    assert nu.to_json().startswith('{"gamma":[3,5],"members":')


def test_not_unique_minimum():
    nu = ValueSemigroup(2, (1, 2), frozenset({(0, 0), (1, 2), (1, 1)}))
    assert nu.minimal_nonzero() == (1, 1)
    bad = ValueSemigroup(2, (2, 2), frozenset({(0, 0), (1, 2), (2, 1), (2, 2)}))
    with pytest.raises(NotUnique):
        bad.minimal_nonzero()


def test_validate_reports():
    bad = ValueSemigroup(2, (2, 2), frozenset({(0, 0), (1, 1), (2, 2), (0, 2)}))
    issues = bad.validate()
    assert any(i.startswith("axis") for i in issues)
    broken = ValueSemigroup(2, (3, 3), frozenset({(0, 0), (1, 2), (3, 3)}))
    assert any("closure" in i for i in broken.validate())


def test_delta_set():
    nu = a_odd(2)
    assert not DeltaSet((1, 1), 0).meets(nu)
    assert DeltaSet((1, 3), 1).meets(nu)


@given(st.integers(0, 5))
def test_odd_a_family(n):
    nu = a_odd(n)
    assert nu.gamma == (n + 1, n + 1)
    assert nu.gorenstein_symmetry(nu.gamma)
    assert not nu.validate()
    s = nu.sum_image()
    assert s.conductor == 2 * (n + 1)


@given(st.lists(st.integers(2, 9), min_size=1, max_size=3))
def test_numerical_embedding(gens):
    import math
    if math.gcd(*gens) != 1:
        return
    S = NumericalSemigroup.from_generators(gens)
    nu = ValueSemigroup.from_numerical(S)
    assert nu.sum_image().equals(S)
    assert nu.gorenstein_symmetry(nu.gamma) == S.is_symmetric()
    for n in range(S.conductor + 3):
        assert nu.contains((n,)) == S.contains(n)


def test_box_membership_clamps():
    nu = a_odd(1)
    for v in itertools.product(range(6), repeat=2):
        assert nu.contains(v) == (v[0] == v[1] or min(v) >= 2)
