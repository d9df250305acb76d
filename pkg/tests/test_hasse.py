import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from carlitzlab.carlitz import context
from carlitzlab.ffield import FieldSpec
from carlitzlab.hasse import (
    coeff_at_zero,
    ht_derivative,
    ht_product_rule,
    ht_quotient_v1,
    ht_quotient_v2,
    lucas_binomial,
    quotient_at_zero,
)
from carlitzlab.hyper import hyper_series
from carlitzlab.poly import FqPoly, RatFunc
from carlitzlab.series import QQ, FunctionField, NonUnitError, TruncSeries
from carlitzlab.verify import random_function_field_series, random_rational_series

F3T = FunctionField(FieldSpec.of(3))

fractions = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))
units = st.builds(Fraction, st.integers(1, 20) | st.integers(-20, -1), st.integers(1, 12))


def qseries(order=10, unit=False):
    first = units if unit else fractions
    return st.tuples(first, st.lists(fractions, min_size=order - 1, max_size=order - 1)).map(
        lambda t: TruncSeries([t[0], *t[1]], QQ)
    )


def test_h0_is_identity():
    f = TruncSeries([Fraction(k, 3) for k in range(8)], QQ)
    assert ht_derivative(f, 0) == f


def test_h1_of_cube_over_Q():
    z3 = TruncSeries.monomial(3, QQ, 6)
    assert ht_derivative(z3, 1) == TruncSeries([0, 0, 3, 0, 0], QQ)


def test_h1_of_cube_char3():
    z3 = TruncSeries.monomial(3, F3T, 6)
    assert all(c.is_zero() for c in ht_derivative(z3, 1))


def test_derivative_order_bookkeeping():
    f = TruncSeries([Fraction(1)] * 10, QQ)
    assert ht_derivative(f, 4).order == 6
    assert ht_derivative(f, 12).order == 0


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_lucas_against_integer_binomials(p):
    for m in range(201):
        for n in range(m + 1):
            assert lucas_binomial(m, n, p) == comb(m, n) % p


def test_lucas_out_of_range():
    assert lucas_binomial(3, 5, 3) == 0
    assert lucas_binomial(3, -1, 3) == 0


@given(qseries(), qseries(), st.integers(1, 5))
@settings(max_examples=60, deadline=None)
def test_leibniz_and_product_rule(f, g, n):
    if n == 1:
        assert ht_product_rule([f, g], 1) == ht_derivative(f, 1) * g + f * ht_derivative(g, 1)
    assert ht_product_rule([f, g], n) == ht_derivative(f * g, n)


def test_product_rule_three_factors_char3():
    rng = random.Random(7)
    spec = FieldSpec.of(3)
    for _ in range(5):
        fs = [random_function_field_series(rng, spec, 10) for _ in range(3)]
        for n in range(1, 6):
            assert ht_product_rule(fs, n) == ht_derivative(fs[0] * fs[1] * fs[2], n)


def test_product_rule_needs_factors():
    with pytest.raises(ValueError):
        ht_product_rule([], 2)


@given(qseries(unit=True), st.integers(1, 6))
@settings(max_examples=60, deadline=None)
def test_quotient_rules_over_Q(f, n):
    want = ht_derivative(f.reciprocal(), n)
    assert ht_quotient_v1(f, n) == want
    assert ht_quotient_v2(f, n) == want


def test_quotient_rules_char3():
    rng = random.Random(11)
    spec = FieldSpec.of(3)
    for _ in range(4):
        f = random_function_field_series(rng, spec, 10, unit=True)
        for n in range(1, 7):
            want = ht_derivative(f.reciprocal(), n)
            assert ht_quotient_v1(f, n) == want
            assert ht_quotient_v2(f, n) == want


def test_quotient_of_one_is_zero():
    one = TruncSeries.constant(Fraction(1), QQ, 8)
    for n in range(1, 6):
        assert all(c == 0 for c in ht_quotient_v1(one, n))
        assert all(c == 0 for c in ht_quotient_v2(one, n))


def test_quotient_rejects_nonunit():
    f = TruncSeries([0, 1, 2], QQ)
    with pytest.raises(NonUnitError):
        ht_quotient_v1(f, 1)
    with pytest.raises(NonUnitError):
        f.reciprocal()


def test_quotient_rule_reproduces_bernoulli_carlitz():
    c = context(3)
    f = c.ec_series(11).shift_down(1)  # e_C(z)/z
    bc = c.bc_cc_numbers("BC", 9).values
    for n in range(1, 10):
        h = ht_quotient_v1(f, n)
        assert coeff_at_zero(h, 0) * c.carlitz_factorial(n) == bc[n]
        assert quotient_at_zero(f.coeffs[: n + 1], n, c.ring, 2) * c.carlitz_factorial(n) == bc[n]


def test_reciprocal_geometric():
    f = TruncSeries([1, -1], QQ, 8)
    assert f.reciprocal() == TruncSeries([1] * 8, QQ)


@given(qseries(unit=True))
@settings(max_examples=60)
def test_reciprocal_defining_property_and_involution(f):
    g = f.reciprocal()
    assert f * g == TruncSeries.constant(Fraction(1), QQ, f.order)
    assert g.reciprocal() == f


def test_reciprocal_of_hypergeometric_series_gives_c34():
    rec = hyper_series("HC", 3, 5).reciprocal()
    assert rec[4] * 24 == Fraction(-1971, 5600)


@given(qseries(), qseries(), fractions, fractions, st.integers(0, 6))
@settings(max_examples=60)
def test_linearity(f, g, a, b, n):
    lhs = ht_derivative(f * a + g * b, n)
    rhs = ht_derivative(f, n) * a + ht_derivative(g, n) * b
    assert lhs == rhs


@pytest.mark.parametrize("N", [1, 2, 3, 5])
def test_coeff_at_zero_hypergeometric(N):
    from math import factorial

    hc = hyper_series("HC", N, 8)
    hb = hyper_series("HB", N, 8)
    for i in range(8):
        assert coeff_at_zero(hc, i) == Fraction(N * (-1) ** i, N + i)
        assert coeff_at_zero(hb, i) == Fraction(factorial(N), factorial(N + i))
        assert coeff_at_zero(ht_derivative(hc, i), 0) == hc[i]
    assert coeff_at_zero(TruncSeries.constant(Fraction(1), QQ, 1), 0) == 1
    with pytest.raises(IndexError):
        coeff_at_zero(hc, 8)


def test_series_truncation_rules():
    a = TruncSeries([1, 2, 3, 4], QQ)
    b = TruncSeries([1, 1], QQ)
    assert (a + b).order == 2 and (a * b).order == 2
    assert (a * b).agrees(TruncSeries([1, 3, 5, 7], QQ))
    with pytest.raises(ValueError):
        a.shift_down(1)


def test_function_field_random_series_are_valid():
    rng = random.Random(0)
    s = random_function_field_series(rng, FieldSpec.of(3), 10, unit=True)
    assert isinstance(s[0], RatFunc) and s[0]
    assert random_rational_series(rng, 10, unit=True)[0] != 0
