"""Hypergeometric Bernoulli and Cauchy numbers over the rationals.

``HB`` numbers B_{N,n} are n! times the coefficients of 1/1F1(1; N+1; x);
``HC`` numbers c_{N,n} are n! times the coefficients of 1/2F1(1, N; N+1; -x).
Each family is computed four ways: series inversion (the reference),
sums over strict compositions, binomially weighted sums over weak
compositions, and sums of associated Stirling numbers.
"""

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .compositions import count_strict, count_weak, strict_compositions, weak_compositions
from .limits import check_enumeration
from .series import QQ, TruncSeries

FAMILIES = ("HB", "HC")
METHODS = ("series", "strict", "weak", "assoc")


@dataclass(frozen=True)
class HyperNumberSeq:
    family: str
    N: int
    values: tuple
    method: str


def _check(family, N):
    if family not in FAMILIES:
        raise ValueError(f"family must be HB or HC, got {family!r}")
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")


def hyper_series(family, N, order):
    """1F1(1; N+1; x) for HB, 2F1(1, N; N+1; -x) for HC, truncated."""
    _check(family, N)
    if order < 1:
        raise ValueError("order must be >= 1")
    if family == "HC":
        cs = [Fraction(N * (-1) ** j, N + j) for j in range(order)]
    else:
        fN = factorial(N)
        cs = [Fraction(fN, factorial(N + j)) for j in range(order)]
    return TruncSeries(cs, QQ)


def _series_method(family, N, max_n):
    rec = hyper_series(family, N, max_n + 1).reciprocal()
    return [factorial(n) * rec[n] for n in range(max_n + 1)]


def _weight(family, N, i):
    # h_i with the sign (-1)^i pulled out front for HC
    if family == "HC":
        return Fraction(1, N + i)
    return Fraction(1, factorial(N + i))


def _composition_sum(family, N, n, k, comps):
    cache = {}
    total = Fraction(0)
    for comp in comps(n, k):
        key = tuple(sorted(comp))
        v = cache.get(key)
        if v is None:
            v = Fraction(1)
            for i in key:
                v *= _weight(family, N, i)
            cache[key] = v
        total += v
    return total


def _scale(family, N, k):
    return (-N) ** k if family == "HC" else (-factorial(N)) ** k


def _strict_value(family, N, n):
    if n == 0:
        return Fraction(1)
    check_enumeration(sum(count_strict(n, k) for k in range(1, n + 1)), "strict compositions")
    s = sum(
        _scale(family, N, k) * _composition_sum(family, N, n, k, strict_compositions)
        for k in range(1, n + 1)
    )
    sign = (-1) ** n if family == "HC" else 1
    return sign * factorial(n) * s


def _weak_value(family, N, n):
    if n == 0:
        return Fraction(1)
    check_enumeration(sum(count_weak(n, k) for k in range(1, n + 1)), "weak compositions")
    s = sum(
        comb(n + 1, k + 1)
        * _scale(family, N, k)
        * _composition_sum(family, N, n, k, weak_compositions)
        for k in range(1, n + 1)
    )
    sign = (-1) ** n if family == "HC" else 1
    return sign * factorial(n) * s


def _assoc_value(family, N, n):
    if n == 0:
        return Fraction(1)
    kind = "first" if family == "HC" else "second"
    s = sum(
        comb(n + 1, k + 1)
        * _scale(family, N, k)
        * Fraction(factorial(k), factorial(n + N * k))
        * assoc_stirling(kind, N, n + N * k, k)
        for k in range(1, n + 1)
    )
    sign = (-1) ** n if family == "HC" else 1
    return sign * factorial(n) * s


_POINTWISE = {"strict": _strict_value, "weak": _weak_value, "assoc": _assoc_value}


def hyper_numbers(family, N, max_n, method="series"):
    _check(family, N)
    if method == "series":
        values = _series_method(family, N, max_n)
    elif method in _POINTWISE:
        fn = _POINTWISE[method]
        values = [fn(family, N, n) for n in range(max_n + 1)]
    else:
        raise ValueError(f"unknown method {method!r}")
    return HyperNumberSeq(family, N, tuple(values), method)


def hyper_numbers_series_method(family, N, max_n):
    return hyper_numbers(family, N, max_n, "series")


def hyper_numbers_strict_compositions(family, N, max_n):
    return hyper_numbers(family, N, max_n, "strict")


def hyper_numbers_weak_compositions(family, N, max_n):
    return hyper_numbers(family, N, max_n, "weak")


def hyper_numbers_assoc_stirling(family, N, max_n):
    return hyper_numbers(family, N, max_n, "assoc")


# associated Stirling numbers


@dataclass
class AssocStirlingTable:
    """(n, k) -> value for n <= max_n; every value is an integer."""

    kind: str
    m: int
    max_n: int
    entries: dict

    def __getitem__(self, nk):
        n, k = nk
        if n > self.max_n:
            raise IndexError(f"table only covers n <= {self.max_n}")
        return self.entries.get((n, k), Fraction(0))


def _base_series(kind, m, order):
    # -log(1-x) - F_{m-1}(x)  or  e^x - E_{m-1}(x): the tail from x^m on
    if kind == "first":
        cs = [Fraction(1, j) if j >= m else Fraction(0) for j in range(order)]
    elif kind == "second":
        cs = [Fraction(1, factorial(j)) if j >= m else Fraction(0) for j in range(order)]
    else:
        raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")
    return TruncSeries(cs, QQ)


def _build_table(kind, m, max_n):
    g = _base_series(kind, m, max_n + 1)
    entries = {}
    power = TruncSeries.constant(Fraction(1), QQ, max_n + 1)
    k = 0
    while m * k <= max_n:
        fk = factorial(k)
        for n in range(m * k, max_n + 1):
            c = power[n]
            if c:
                entries[n, k] = c * factorial(n) / fk
        power = power * g
        k += 1
    return AssocStirlingTable(kind, m, max_n, entries)


_tables = {}
_tables_lock = threading.Lock()


def assoc_stirling_table(kind, m, max_n):
    if m < 1:
        raise ValueError("association order m must be >= 1")
    with _tables_lock:
        t = _tables.get((kind, m))
        if t is None or t.max_n < max_n:
            t = _build_table(kind, m, max(max_n, 2 * (t.max_n if t else 0)))
            _tables[kind, m] = t
        return t


def assoc_stirling(kind, m, n, k):
    """n!/k! times the x^n coefficient of the k-th power of the tail series."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    return assoc_stirling_table(kind, m, n)[n, k]


def composition_identity_sides(kind, N, n, k):
    """Both sides of k!/(n+Nk)! * S(n+Nk, k; >=N) = sum over weak compositions."""
    lhs = Fraction(factorial(k), factorial(n + N * k)) * assoc_stirling(kind, N, n + N * k, k)
    family = "HC" if kind == "first" else "HB"
    check_enumeration(count_weak(n, k), "weak compositions")
    rhs = _composition_sum(family, N, n, k, weak_compositions)
    return lhs, rhs


def composition_identity_check(kind, N, n, k):
    lhs, rhs = composition_identity_sides(kind, N, n, k)
    return lhs == rhs


# the N = 1 specialisations


def cauchy_from_stirling(n):
    """c_n = sum_k (-1)^(n-k) C(n+1,k+1)/C(n+k,k) * stf(n+k, k), n >= 1."""
    return sum(
        Fraction((-1) ** (n - k) * comb(n + 1, k + 1), comb(n + k, k))
        * assoc_stirling("first", 1, n + k, k)
        for k in range(1, n + 1)
    )


def bernoulli_from_stirling(n):
    """B_n = sum_k (-1)^k C(n+1,k+1)/C(n+k,k) * sts(n+k, k), n >= 1."""
    return sum(
        Fraction((-1) ** k * comb(n + 1, k + 1), comb(n + k, k))
        * assoc_stirling("second", 1, n + k, k)
        for k in range(1, n + 1)
    )


@lru_cache(maxsize=None)
def cross_method(family, N, max_n):
    """All four methods side by side; returns (values_by_method, agree_per_n)."""
    res = {m: hyper_numbers(family, N, max_n, m).values for m in METHODS}
    agree = tuple(len({res[m][n] for m in METHODS}) == 1 for n in range(max_n + 1))
    return res, agree
