"""Carlitz brackets, factorials, the additive polynomials e_n, and the
exponential/logarithm series with their Bernoulli- and Cauchy-type
coefficients.

Note ``E_n(z) = e_n(z) / D_n``; only ``e_n`` is exposed.
"""

import threading
from dataclasses import dataclass
from functools import lru_cache

from .ffield import FieldSpec
from .hasse import quotient_at_zero
from .limits import check_degree, check_enumeration
from .poly import FqPoly, RatFunc, enumerate_A, format_poly
from .series import FunctionField, TruncSeries


class SparsityError(AssertionError):
    """e_n expanded with a nonzero coefficient off the exponents r**i."""


@dataclass(frozen=True)
class AdditivePoly:
    """e_n(z) = sum_i coeffs[i] * z**(r**i)."""

    n: int
    coeffs: tuple
    spec: FieldSpec

    def __call__(self, z):
        r = self.spec.r
        total = FqPoly.zero(self.spec)
        for i, c in enumerate(self.coeffs):
            if c:
                total = total + c * z ** (r**i)
        return total

    def format(self, balanced=False):
        r = self.spec.r
        out = []
        for i in range(self.n, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            neg = False
            if balanced and self.spec.balanced(c.lc) < 0:
                neg, c = True, -c
            zp = "z" if i == 0 else f"z^{r**i}"
            if c.is_one():
                body = zp
            elif len([x for x in c.coeffs if x]) == 1:
                body = f"{format_poly(c, balanced)} {zp}"
            else:
                body = f"({format_poly(c, balanced)}) {zp}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class CarlitzCoeffSeq:
    kind: str  # "BC" or "CC"
    values: tuple
    order: int


class CarlitzContext:
    """Cached [i], D_i, L_i for one field; safe to share between threads."""

    def __init__(self, r):
        self.spec = FieldSpec.of(r) if isinstance(r, int) else r
        self.r = self.spec.r
        self.ring = FunctionField(self.spec)
        self._lock = threading.RLock()
        self._cache = {}

    def _memo(self, key, compute):
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        with self._lock:
            hit = self._cache.get(key)
            if hit is None:
                hit = compute()
                self._cache[key] = hit
            return hit

    def bracket(self, i):
        if i < 1:
            raise ValueError("[i] is defined for i >= 1")

        def compute():
            check_degree(self.r**i)
            T = FqPoly.T(self.spec)
            return FqPoly.T(self.spec, self.r**i) - T

        return self._memo(("bracket", i), compute)

    def D(self, i):
        if i < 0:
            raise ValueError("D_i needs i >= 0")
        if i == 0:
            return FqPoly.one(self.spec)

        def compute():
            check_degree(i * self.r**i)
            # D_{i-1}**r is an e-fold Frobenius
            return self.bracket(i) * self.D(i - 1).frobenius(self.spec.e)

        return self._memo(("D", i), compute)

    def L(self, i):
        if i < 0:
            raise ValueError("L_i needs i >= 0")
        if i == 0:
            return FqPoly.one(self.spec)
        return self._memo(("L", i), lambda: self.bracket(i) * self.L(i - 1))

    def power_r(self, f, j):
        """f**(r**j), computed as a Frobenius."""
        return f.frobenius(self.spec.e * j)

    def carlitz_factorial(self, n):
        """Product of D_j**c_j over the base-r digits c_j of n."""
        if n < 0:
            raise ValueError("Carlitz factorial needs n >= 0")
        digits = []
        m = n
        while m:
            m, c = divmod(m, self.r)
            digits.append(c)
        check_degree(sum(c * j * self.r**j for j, c in enumerate(digits)))
        out = FqPoly.one(self.spec)
        for j, c in enumerate(digits):
            if c:
                out = out * self.D(j) ** c
        return out

    def e_n(self, n):
        """Expand prod_{deg(alpha) < n} (z + alpha) and read off its r-power terms."""
        return self._memo(("e_n", n), lambda: self._expand_e_n(n))

    def _expand_e_n(self, n):
        sp = self.spec
        check_enumeration(self.r**n, "A(n)")
        zero = FqPoly.zero(sp)
        poly = [FqPoly.one(sp)]  # coefficients in z, low to high
        for alpha in enumerate_A(n, sp):
            nxt = [zero] * (len(poly) + 1)
            for j, c in enumerate(poly):
                nxt[j + 1] = nxt[j + 1] + c
                if alpha and c:
                    nxt[j] = nxt[j] + alpha * c
            poly = nxt
        support = {self.r**i: i for i in range(n + 1)}
        coeffs = [zero] * (n + 1)
        for m, c in enumerate(poly):
            if not c:
                continue
            if m not in support:
                raise SparsityError(f"e_{n} has a nonzero z^{m} term (r={self.r})")
            coeffs[support[m]] = c
        return AdditivePoly(n, tuple(coeffs), sp)

    def _carlitz_series(self, order, log):
        ring = self.ring
        out = [ring.zero() for _ in range(order)]
        i, m = 0, 1
        while m < order:
            den = self.L(i) if log else self.D(i)
            sign = -1 if (log and i % 2) else 1
            out[m] = RatFunc(FqPoly.const(sign, self.spec), den)
            i += 1
            m *= self.r
        return TruncSeries(out, ring)

    def ec_series(self, order):
        """e_C(x) = sum x**(r**i) / D_i, truncated."""
        if order < 1:
            raise ValueError("order must be >= 1")
        return self._carlitz_series(order, log=False)

    def logc_series(self, order):
        """log_C(x) = sum (-1)**i x**(r**i) / L_i, truncated."""
        if order < 1:
            raise ValueError("order must be >= 1")
        return self._carlitz_series(order, log=True)

    def _unit_series(self, kind, order):
        # e_C(z)/z or log_C(z)/z, which have constant term 1
        if kind == "BC":
            s = self.ec_series(order + 1)
        elif kind == "CC":
            s = self.logc_series(order + 1)
        else:
            raise ValueError(f"kind must be BC or CC, got {kind!r}")
        return s.shift_down(1)

    def bc_cc_numbers(self, kind, max_n=None):
        """BC_n or CC_n for n <= max_n via series inversion, scaled by Pi(n)."""
        if max_n is None:
            max_n = self.r**2
        rec = self._unit_series(kind, max_n + 1).reciprocal()
        values = tuple(rec[n] * self.carlitz_factorial(n) for n in range(max_n + 1))
        return CarlitzCoeffSeq(kind, values, max_n + 1)

    def bc_cc_quotient_rule(self, kind, max_n=None, variant=1):
        """Same numbers through the quotient rule for H^(n)(1/f) at zero."""
        if max_n is None:
            max_n = self.r**2
        f = self._unit_series(kind, max_n + 1)
        values = tuple(
            quotient_at_zero(f.coeffs[: n + 1], n, self.ring, variant)
            * self.carlitz_factorial(n)
            for n in range(max_n + 1)
        )
        return CarlitzCoeffSeq(kind, values, max_n + 1)


@lru_cache(maxsize=None)
def context(r):
    """Shared CarlitzContext for field size r."""
    return CarlitzContext(r)
