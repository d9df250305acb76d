from fractions import Fraction
from math import comb, factorial

import pytest

from carlitzlab.compositions import weak_compositions
from carlitzlab.hyper import (
    METHODS,
    assoc_stirling,
    bernoulli_from_stirling,
    cauchy_from_stirling,
    composition_identity_check,
    composition_identity_sides,
    cross_method,
    hyper_numbers,
    hyper_series,
)
from carlitzlab.limits import GuardExceeded, set_limits

from oracles import assoc_rec, bernoulli_rec, cauchy_integral, stirling_first_rec, stirling_second_rec


def test_series_coefficients():
    assert hyper_series("HC", 1, 3)[1] == Fraction(-1, 2)
    assert hyper_series("HB", 4, 3)[0] == 1
    assert hyper_series("HB", 2, 3)[1] == Fraction(1, 3)
    with pytest.raises(ValueError):
        hyper_series("HB", 0, 3)
    with pytest.raises(ValueError):
        hyper_series("XX", 1, 3)


@pytest.mark.parametrize("method", METHODS)
def test_c34_every_method(method):
    assert hyper_numbers("HC", 3, 4, method).values[4] == Fraction(-1971, 5600)


@pytest.mark.parametrize("method", METHODS)
@pytest.mark.parametrize("N", [1, 2, 3, 7])
def test_n1_values(method, N):
    assert hyper_numbers("HC", N, 1, method).values == (1, Fraction(N, N + 1))
    assert hyper_numbers("HB", N, 1, method).values == (1, Fraction(-1, N + 1))


def test_weak_k1_term_by_hand():
    # n = 1 has only k = 1 and the composition (1): -1 * C(2,2) * (-N)/(N+1)
    for N in (1, 2, 5):
        assert -1 * comb(2, 2) * Fraction(-N, N + 1) == hyper_numbers("HC", N, 1, "weak").values[1]


@pytest.mark.parametrize("family", ["HB", "HC"])
@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_four_way_agreement(family, N):
    res, agree = cross_method(family, N, 10)
    assert all(agree)
    assert {res[m][0] for m in METHODS} == {1}


def test_bernoulli_reduction():
    B = bernoulli_rec(12)
    assert hyper_numbers("HB", 1, 12).values == tuple(B)
    assert B[2] == Fraction(1, 6)


def test_remark_formulas():
    B = bernoulli_rec(10)
    for n in range(1, 11):
        assert cauchy_from_stirling(n) == cauchy_integral(n)
        assert bernoulli_from_stirling(n) == B[n]
        assert hyper_numbers("HC", 1, n, "series").values[n] == cauchy_integral(n)


def test_reference_assoc_fractions():
    want = {(7, 1): Fraction(1, 7), (10, 2): Fraction(153, 1400),
            (13, 3): Fraction(1751, 50400), (16, 4): Fraction(190261, 29030400)}
    for (n, k), v in want.items():
        assert assoc_stirling("first", 3, n, k) / factorial(n) == v


@pytest.mark.parametrize("kind", ["first", "second"])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_assoc_against_combinatorial_recurrence(kind, m):
    ref = assoc_rec(18, m, kind)
    for n in range(19):
        for k in range(n + 1):
            v = assoc_stirling(kind, m, n, k)
            assert v.denominator == 1
            assert v == ref.get((n, k), 0)
            if n < m * k:
                assert v == 0


def test_m1_is_classical():
    s1, s2 = stirling_first_rec(15), stirling_second_rec(15)
    for n in range(16):
        for k in range(n + 1):
            assert assoc_stirling("first", 1, n, k) == s1[n, k]
            assert assoc_stirling("second", 1, n, k) == s2[n, k]
    assert assoc_stirling("first", 1, 4, 2) == 11


def test_classical_recurrences_hold_on_tables():
    for n in range(12):
        for k in range(1, n + 2):
            assert assoc_stirling("first", 1, n + 1, k) == (
                assoc_stirling("first", 1, n, k - 1) + n * assoc_stirling("first", 1, n, k))
            assert assoc_stirling("second", 1, n + 1, k) == (
                assoc_stirling("second", 1, n, k - 1) + k * assoc_stirling("second", 1, n, k))


@pytest.mark.parametrize("kind", ["first", "second"])
def test_composition_identities(kind):
    for N in range(1, 4):
        for n in range(7):
            for k in range(1, 5):
                assert composition_identity_check(kind, N, n, k)


def test_composition_identity_edge_cases():
    for N in (1, 2, 3):
        lhs, rhs = composition_identity_sides("first", N, 0, 3)
        assert lhs == rhs == Fraction(1, N) ** 3
        lhs, rhs = composition_identity_sides("second", N, 0, 2)
        assert lhs == rhs == Fraction(1, factorial(N)) ** 2
        for n in range(5):
            lhs, _ = composition_identity_sides("first", N, n, 1)
            assert lhs == Fraction(1, n + N)
    # N = 3, n = 4, k = 2 summed independently here
    rhs = sum(Fraction(1, (a + 3) * (b + 3)) for a, b in weak_compositions(4, 2))
    assert composition_identity_sides("first", 3, 4, 2) == (rhs, rhs)


def test_composition_guard():
    set_limits(max_enumeration=10)
    try:
        with pytest.raises(GuardExceeded):
            hyper_numbers("HC", 2, 8, "strict")
    finally:
        set_limits(max_enumeration=2**24)


def test_unknown_method():
    with pytest.raises(ValueError):
        hyper_numbers("HC", 2, 3, "magic")
