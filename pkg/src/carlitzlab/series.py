"""Truncated formal power series over an exact commutative ring.

A ``TruncSeries`` holds the coefficients of z**0 .. z**(order-1); anything
beyond is unknown.  Binary operations keep the smaller order.  The
coefficient ring is described by a small ring object (``QQ`` or a
``FunctionField``) giving zero, one, the integer embedding and unit
inverses; the coefficients themselves use ordinary Python operators.
"""

from fractions import Fraction

from .poly import RatFunc


class RationalField:
    characteristic = 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def is_unit(self, a):
        return a != 0

    def inverse(self, a):
        return 1 / Fraction(a)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class FunctionField:
    """F_r(T) as a coefficient ring."""

    def __init__(self, spec):
        self.spec = spec
        self.characteristic = spec.p

    def zero(self):
        return RatFunc.from_int(0, self.spec)

    def one(self):
        return RatFunc.from_int(1, self.spec)

    def from_int(self, k):
        return RatFunc.from_int(k, self.spec)

    def is_unit(self, a):
        return not a.is_zero()

    def inverse(self, a):
        return a.inverse()

    def __eq__(self, o):
        return isinstance(o, FunctionField) and o.spec == self.spec

    def __hash__(self):
        return hash(("F(T)", self.spec.r))

    def __repr__(self):
        return f"F_{self.spec.r}(T)"


class NonUnitError(ArithmeticError):
    """The constant term of a series is not invertible."""


def _is_zero(c):
    return not c


class TruncSeries:
    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs, ring, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs)
        if len(coeffs) < order:
            coeffs += [ring.zero() for _ in range(order - len(coeffs))]
        self.coeffs = tuple(coeffs[:order])
        self.ring = ring

    @property
    def order(self):
        return len(self.coeffs)

    @classmethod
    def constant(cls, c, ring, order):
        return cls([c], ring, order)

    @classmethod
    def monomial(cls, k, ring, order, c=None):
        c = ring.one() if c is None else c
        return cls([ring.zero()] * k + [c], ring, order)

    def __getitem__(self, m):
        return self.coeffs[m]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, o):
        if not isinstance(o, TruncSeries):
            return NotImplemented
        return self.coeffs == o.coeffs

    def agrees(self, o):
        """Equality on the common valid order."""
        n = min(self.order, o.order)
        return self.coeffs[:n] == o.coeffs[:n]

    def truncate(self, order):
        return TruncSeries(self.coeffs[:order], self.ring, min(order, self.order))

    def __repr__(self):
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"TruncSeries([{terms}], order={self.order})"

    def __add__(self, o):
        if not isinstance(o, TruncSeries):
            o = TruncSeries.constant(o, self.ring, self.order)
        return TruncSeries([a + b for a, b in zip(self.coeffs, o.coeffs)], self.ring)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-a for a in self.coeffs], self.ring)

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def scale(self, c):
        return TruncSeries([c * a for a in self.coeffs], self.ring)

    def __mul__(self, o):
        if not isinstance(o, TruncSeries):
            return self.scale(o)
        n = min(self.order, o.order)
        a, b = self.coeffs, o.coeffs
        out = [self.ring.zero() for _ in range(n)]
        for i in range(n):
            ai = a[i]
            if _is_zero(ai):
                continue
            for j in range(n - i):
                bj = b[j]
                if not _is_zero(bj):
                    out[i + j] = out[i + j] + ai * bj
        return TruncSeries(out, self.ring)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.reciprocal() ** (-k)
        out = TruncSeries.constant(self.ring.one(), self.ring, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def reciprocal(self):
        """1/f by b_0 = 1/a_0, b_m = -(1/a_0) * sum_{j=1..m} a_j b_{m-j}."""
        if not self.coeffs or not self.ring.is_unit(self.coeffs[0]):
            raise NonUnitError("constant term is not a unit")
        a = self.coeffs
        inv0 = self.ring.inverse(a[0])
        b = [inv0]
        for m in range(1, self.order):
            acc = self.ring.zero()
            for j in range(1, m + 1):
                if not _is_zero(a[j]):
                    acc = acc + a[j] * b[m - j]
            b.append(-(inv0 * acc))
        return TruncSeries(b, self.ring)

    def shift_down(self, k):
        """Divide by z**k; the first k coefficients must vanish."""
        if any(not _is_zero(c) for c in self.coeffs[:k]):
            raise ValueError(f"series is not divisible by z^{k}")
        return TruncSeries(self.coeffs[k:], self.ring)

    def map(self, fn):
        return TruncSeries([fn(c) for c in self.coeffs], self.ring)
