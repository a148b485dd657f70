from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from curvemilnor.errors import (DivideByExactZero, FieldMismatch, MalformedScalar, NotDivisible,
                                ZeroDenominator)
from curvemilnor.series import (RATIONALS, BranchElement, FieldSpec, PolyExpr, TruncatedSeries,
                                parse_scalar, poly_evaluate, series_divide, value_vector)

F7 = FieldSpec(7)


def S(d, prec=None, field=RATIONALS):
    return TruncatedSeries.from_dict(field, d, prec)


class TestScalars:
    def test_rational_forms(self):
        assert parse_scalar("-3/6", RATIONALS) == Fraction(-1, 2)
        assert parse_scalar("+5", RATIONALS) == 5
        assert parse_scalar("0/4", RATIONALS) == 0

    def test_prime_reduction(self):
        assert parse_scalar("10", F7) == 3
        assert parse_scalar("1/2", F7) == 4
        assert parse_scalar("-1", F7) == 6

    @pytest.mark.parametrize("bad", ["", "1.5", "a", "1/", "/2", "1//2", "--1", "1e3", " "])
    def test_malformed(self, bad):
        with pytest.raises(MalformedScalar):
            parse_scalar(bad, RATIONALS)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominator):
            parse_scalar("1/0", RATIONALS)
        with pytest.raises(ZeroDenominator):
            parse_scalar("1/7", F7)

    def test_field_text(self):
        assert FieldSpec.from_text("rational") == RATIONALS
        assert FieldSpec.from_text("prime:101") == FieldSpec(101)
        assert str(FieldSpec(101)) == "prime:101"
        for bad in ("prime:4", "prime:2", "reals"):
            with pytest.raises(ValueError):
                FieldSpec.from_text(bad)


class TestSeries:
    def test_order_and_precision(self):
        assert S({3: 1, 5: 2}).order().value == 3
        assert S({}).order().is_exact_zero
        unknown = S({}, 6)
        assert unknown.order().is_unknown and unknown.order().value == 6

    def test_product_precision(self):
        a = S({1: 1, 2: 1}, 5)
        b = S({2: 3}, 4)
        # min(5 + 2, 4 + 1)
        assert (a * b).precision == 5
        assert (a * b).as_dict() == {3: 3, 4: 3}

    def test_sum_precision(self):
        assert (S({1: 1}, 3) + S({1: -1, 4: 1})).precision == 3
        assert (S({1: 1}, 3) + S({1: -1})).order().is_unknown

    def test_exact_division(self):
        q = series_divide(S({5: 1}), S({3: 1, 4: 1}))
        # default available precision ord(a) + 16, minus ord(b)
        assert q.precision == 5 + 16 - 3
        assert (q * S({3: 1, 4: 1})).truncate(q.precision + 3).as_dict() == {5: 1}
        exact = series_divide(S({3: 1, 5: 1}), S({1: 1}))
        assert exact.is_exact and exact.as_dict() == {2: 1, 4: 1}

    def test_division_errors(self):
        with pytest.raises(DivideByExactZero):
            series_divide(S({1: 1}), S({}))
        with pytest.raises(NotDivisible):
            series_divide(S({1: 1}), S({2: 1}))
        with pytest.raises(NotDivisible):
            series_divide(S({3: 1}), S({}, 4))

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatch):
            S({1: 1}) + S({1: 1}, field=F7)

    def test_dense_and_coeff(self):
        s = S({1: 2, 3: 1}, 5)
        assert s.dense(4) == [0, 2, 0, 1]
        with pytest.raises(ValueError):
            s.dense(6)
        with pytest.raises(ValueError):
            s.coeff(5)


coeffs = st.integers(-4, 4)
exact_series = st.dictionaries(st.integers(0, 8), coeffs, max_size=5).map(lambda d: S(d))
prec_series = st.tuples(st.dictionaries(st.integers(0, 8), coeffs, max_size=5), st.integers(1, 12)).map(
    lambda t: S(t[0], t[1]))


def agree(a, b):
    """Equal on the common known range."""
    n = min(x for x in (a.precision, b.precision, 40) if x is not None)
    return a.dense(n) == b.dense(n)


@given(exact_series, exact_series, exact_series)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == S({})


@given(prec_series, prec_series)
def test_truncated_product_is_truncation_of_exact_product(a, b):
    exact = S(dict(a.terms)) * S(dict(b.terms))
    prod = a * b
    assert agree(prod, exact)


@given(exact_series, st.dictionaries(st.integers(0, 6), st.integers(1, 4), min_size=1, max_size=4))
def test_division_roundtrip(a, bd):
    b = S(bd)
    k = b.order().value
    num = a * S({k: 1})
    q = series_divide(num, b, precision=40)
    back = q * b
    n = min(back.precision or 40, 40)
    assert back.dense(n) == num.dense(n)


@given(st.dictionaries(st.integers(0, 6), coeffs, max_size=4), st.dictionaries(st.integers(0, 6), coeffs, max_size=4))
def test_prime_field_matches_rational_reduction(da, db):
    qa, qb = S(da), S(db)
    pa, pb = S(da, field=F7), S(db, field=F7)
    reduced = {e: v % 7 for e, v in (qa * qb).terms if v % 7}
    assert (pa * pb).as_dict() == reduced


class TestElements:
    def test_branch_element_arith(self):
        e = BranchElement([S({1: 1}), S({2: 1})])
        f = BranchElement([S({1: 1}), S({})])
        v = value_vector(e * f)
        assert v[0].value == 2 and v[1].is_exact_zero
        assert [o.value for o in value_vector(e + f)] == [1, 2]

    def test_poly_evaluate(self):
        x = BranchElement([S({3: 1})])
        y = BranchElement([S({2: 1})])
        g = PolyExpr.from_dict(RATIONALS, 2, {(0, 3): 1, (2, 0): -1})
        assert poly_evaluate(g, [x, y]).components[0] == S({})
        h = PolyExpr.variable(RATIONALS, 2, 0) ** 2 + PolyExpr.constant(RATIONALS, 2, 3)
        assert poly_evaluate(h, [x, y]).components[0].as_dict() == {0: 3, 6: 1}
        assert h.degree() == 2 and h.constant_term() == 3

    @given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), coeffs, max_size=4),
           st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), coeffs, max_size=4))
    def test_evaluation_is_a_ring_map(self, dg, dh):
        gens = [BranchElement([S({2: 1}), S({1: 1})]), BranchElement([S({3: 1}), S({1: -1, 2: 1})])]
        g = PolyExpr.from_dict(RATIONALS, 2, dg)
        h = PolyExpr.from_dict(RATIONALS, 2, dh)
        assert poly_evaluate(g * h, gens) == poly_evaluate(g, gens) * poly_evaluate(h, gens)
        assert poly_evaluate(g + h, gens) == poly_evaluate(g, gens) + poly_evaluate(h, gens)
