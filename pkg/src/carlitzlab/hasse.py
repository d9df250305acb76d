"""Hasse-Teichmuller derivatives and their product and quotient rules.

``H^(n)`` sends ``sum a_m z^m`` to ``sum a_m C(m, n) z^(m-n)``, with the
binomial read in the coefficient ring; in characteristic p that is
C(m, n) mod p, taken from the base-p digits (Lucas).  Only power series
(no negative exponents) are supported.
"""

from math import comb

from .compositions import strict_compositions, weak_compositions
from .series import NonUnitError, TruncSeries


def lucas_binomial(m, n, p):
    """C(m, n) mod p as a product of digit binomials."""
    if n < 0 or n > m:
        return 0
    out = 1
    while m or n:
        m, mi = divmod(m, p)
        n, ni = divmod(n, p)
        if ni > mi:
            return 0
        out = out * comb(mi, ni) % p
    return out


def ring_binomial(ring, m, n):
    p = ring.characteristic
    if p:
        return ring.from_int(lucas_binomial(m, n, p))
    return ring.from_int(comb(m, n))


def ht_derivative(f, n):
    """H^(n)(f); the result is valid to order ``f.order - n``."""
    ring = f.ring
    out = []
    for m in range(n, f.order):
        a = f[m]
        if not a:
            out.append(ring.zero())
            continue
        b = ring_binomial(ring, m, n)
        out.append(b * a if b else ring.zero())
    return TruncSeries(out, ring, max(f.order - n, 0))


def coeff_at_zero(f, i):
    """H^(i)(f) evaluated at z = 0, which is the i-th coefficient of f."""
    if not 0 <= i < f.order:
        raise IndexError(f"coefficient {i} outside truncation order {f.order}")
    return f[i]


def _derivatives(f, n, order=None):
    ders = [ht_derivative(f, i) for i in range(n + 1)]
    if order is not None:
        ders = [d.truncate(order) for d in ders]
    return ders


def ht_product_rule(fs, n):
    """H^(n)(f_1 ... f_k) summed over weak compositions i_1+...+i_k = n."""
    if not fs:
        raise ValueError("product rule needs at least one factor")
    ring = fs[0].ring
    order = max(min(f.order for f in fs) - n, 0)
    ders = [_derivatives(f, n, order) for f in fs]
    total = TruncSeries([], ring, order)
    for comp in weak_compositions(n, len(fs)):
        term = ders[0][comp[0]]
        for d, i in zip(ders[1:], comp[1:]):
            term = term * d[i]
        total = total + term
    return total


def _check_unit(f):
    if not f.order or not f.ring.is_unit(f[0]):
        raise NonUnitError("quotient rule needs a unit constant term")


def _sym_product(cache, ders, comp):
    # the product only depends on the multiset of orders, so share it
    key = tuple(sorted(comp))
    hit = cache.get(key)
    if hit is None:
        hit = ders[key[0]]
        for i in key[1:]:
            hit = hit * ders[i]
        cache[key] = hit
    return hit


def ht_quotient_v1(f, n):
    """H^(n)(1/f) = sum_k (-1)^k / f^(k+1) * sum_{i_j >= 1, sum = n} prod H^(i_j)(f)."""
    _check_unit(f)
    ring = f.ring
    order = max(f.order - n, 0)
    ders = _derivatives(f, n, order)
    rec = f.reciprocal().truncate(order)
    cache = {}
    total = TruncSeries([], ring, order)
    for k in range(1, n + 1):
        inner = TruncSeries([], ring, total.order)
        for comp in strict_compositions(n, k):
            inner = inner + _sym_product(cache, ders, comp)
        term = rec ** (k + 1) * inner
        total = total + (term if k % 2 == 0 else -term)
    return total


def ht_quotient_v2(f, n):
    """The binomial form: weights C(n+1, k+1) and i_j >= 0."""
    _check_unit(f)
    ring = f.ring
    order = max(f.order - n, 0)
    ders = _derivatives(f, n, order)
    rec = f.reciprocal().truncate(order)
    cache = {}
    total = TruncSeries([], ring, order)
    for k in range(1, n + 1):
        inner = TruncSeries([], ring, total.order)
        for comp in weak_compositions(n, k):
            inner = inner + _sym_product(cache, ders, comp)
        term = (rec ** (k + 1) * inner).scale(ring_binomial(ring, n + 1, k + 1))
        total = total + (term if k % 2 == 0 else -term)
    return total


def quotient_at_zero(coeffs, n, ring, variant=1):
    """H^(n)(1/f) at z = 0 from the coefficients a_0..a_n of f.

    At the origin every H^(i)(f) collapses to a_i and 1/f^(k+1) to
    a_0^-(k+1), so either quotient rule becomes a finite sum of scalars.
    """
    a = list(coeffs)
    if not a or not ring.is_unit(a[0]):
        raise NonUnitError("quotient rule needs a unit constant term")
    if n == 0:
        return ring.inverse(a[0])
    inv0 = ring.inverse(a[0])
    comps = strict_compositions if variant == 1 else weak_compositions
    cache = {}
    total = ring.zero()
    for k in range(1, n + 1):
        inner = ring.zero()
        for comp in comps(n, k):
            key = tuple(sorted(comp))
            v = cache.get(key)
            if v is None:
                v = ring.one()
                for i in key:
                    if not a[i]:
                        v = ring.zero()
                        break
                    v = v * a[i]
                cache[key] = v
            if v:
                inner = inner + v
        if not inner:
            continue
        term = inv0 ** (k + 1) * inner
        if variant != 1:
            term = term * ring_binomial(ring, n + 1, k + 1)
        total = total + (term if k % 2 == 0 else -term)
    return total
