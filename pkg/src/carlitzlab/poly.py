"""Dense polynomials over F_r in the variable T, and rational functions in T.

``FqPoly`` is the ring A = F_r[T]; ``RatFunc`` is its fraction field
F_r(T).  Both are immutable.  Coefficients are the integer codes of
:mod:`carlitzlab.ffield`.
"""

import re
from itertools import product

from . import kernel
from .ffield import FieldSpec
from .limits import InexactDivision, check_degree, check_enumeration

NEG_INF = float("-inf")


def _trim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return c


class FqPoly:
    __slots__ = ("coeffs", "spec", "_hash")

    def __init__(self, coeffs, spec):
        self.coeffs = tuple(_trim(coeffs))
        self.spec = spec
        self._hash = None

    @classmethod
    def _raw(cls, coeffs, spec):
        # trusted constructor: coeffs is already a trimmed tuple
        f = object.__new__(cls)
        f.coeffs = coeffs
        f.spec = spec
        f._hash = None
        return f

    # constructors

    @classmethod
    def zero(cls, spec):
        return cls((), spec)

    @classmethod
    def one(cls, spec):
        return cls((1,), spec)

    @classmethod
    def const(cls, c, spec):
        return cls((spec.from_int(c) if isinstance(c, int) else c.rep,), spec)

    @classmethod
    def T(cls, spec, k=1):
        return cls([0] * k + [1], spec)

    @classmethod
    def from_ints(cls, ints, spec):
        """Little-endian integers, each reduced into F_p (prime subfield)."""
        return cls([spec.from_int(c) for c in ints], spec)

    # basic queries

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, o):
        if isinstance(o, int):
            o = FqPoly.const(o, self.spec)
        if not isinstance(o, FqPoly):
            return NotImplemented
        return self.spec == o.spec and self.coeffs == o.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.spec.r, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"FqPoly({format_poly(self)!r}, r={self.spec.r})"

    def __str__(self):
        return format_poly(self)

    # ring operations

    def _coerce(self, o):
        if isinstance(o, FqPoly):
            if o.spec is not self.spec:
                self.spec.check_same(o.spec)
            return o
        if isinstance(o, int):
            return FqPoly.const(o, self.spec)
        return NotImplemented

    def __add__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        sp = self.spec
        if sp.is_prime:
            p = sp.p
            out = [(x + y) % p for x, y in zip(a, b)] + list(a[len(b):])
        else:
            out = [sp.add(x, y) for x, y in zip(a, b)] + list(a[len(b):])
        return FqPoly(out, sp)

    __radd__ = __add__

    def __neg__(self):
        sp = self.spec
        return FqPoly([sp.neg(c) for c in self.coeffs], sp)

    def __sub__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        if not self.coeffs or not o.coeffs:
            return FqPoly.zero(self.spec)
        check_degree(self.degree + o.degree)
        sp = self.spec
        if sp.is_prime:
            return FqPoly._raw(tuple(kernel.mul(list(self.coeffs), list(o.coeffs), sp.p)), sp)
        return FqPoly(_generic_mul(self.coeffs, o.coeffs, sp), sp)

    __rmul__ = __mul__

    def scale(self, c):
        """Multiply by the field element with code ``c``."""
        sp = self.spec
        return FqPoly([sp.mul(c, x) for x in self.coeffs], sp)

    def shift(self, k):
        """Multiply by T**k."""
        if not self.coeffs:
            return self
        check_degree(self.degree + k)
        return FqPoly([0] * k + list(self.coeffs), self.spec)

    def __divmod__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        if not o.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        sp = self.spec
        if sp.is_prime:
            q, r = kernel.divmod_(list(self.coeffs), list(o.coeffs), sp.p)
            return FqPoly._raw(tuple(q), sp), FqPoly._raw(tuple(r), sp)
        else:
            q, r = _generic_divmod(self.coeffs, o.coeffs, sp)
        return FqPoly(q, sp), FqPoly(r, sp)

    def __floordiv__(self, o):
        return divmod(self, o)[0]

    def __mod__(self, o):
        return divmod(self, o)[1]

    def divexact(self, o):
        """Quotient of a division known to be exact; a remainder is an error."""
        q, r = divmod(self, o)
        if r:
            raise InexactDivision(
                f"remainder of degree {r.degree} dividing degree {self.degree} "
                f"by degree {o.degree}"
            )
        return q

    def monic(self):
        if not self.coeffs or self.lc == 1:
            return self
        return self.scale(self.spec.inv(self.lc))

    def frobenius(self, s=1):
        """Raise to the power p**s, which in characteristic p acts termwise."""
        if not self.coeffs:
            return self
        q = self.spec.p**s
        check_degree(self.degree * q)
        out = [0] * (self.degree * q + 1)
        sp = self.spec
        for k, c in enumerate(self.coeffs):
            if c:
                out[k * q] = sp.frob(c, s)
        return FqPoly(out, sp)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative exponent for a polynomial")
        if k == 0:
            return FqPoly.one(self.spec)
        if not self.coeffs:
            return self
        check_degree(self.degree * k)
        # f**k = prod_j (f**c_j)**(p**j) over the base-p digits c_j of k
        p = self.spec.p
        out = FqPoly.one(self.spec)
        s = 0
        while k:
            k, c = divmod(k, p)
            if c:
                g = self
                acc = FqPoly.one(self.spec)
                while c:
                    if c & 1:
                        acc = acc * g
                    c >>= 1
                    if c:
                        g = g * g
                out = out * acc.frobenius(s)
            s += 1
        return out

    def __call__(self, x):
        """Horner evaluation at a field code."""
        sp = self.spec
        acc = 0
        for c in reversed(self.coeffs):
            acc = sp.add(sp.mul(acc, x), c)
        return acc


def _generic_mul(a, b, sp):
    out = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a):
                if x:
                    out[i + j] = sp.add(out[i + j], sp.mul(x, y))
    return out


def _generic_divmod(a, b, sp):
    db = len(b) - 1
    if len(a) <= db:
        return [], list(a)
    inv = sp.inv(b[-1])
    r = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db]
        if c:
            c = sp.mul(c, inv)
            q[k] = c
            for j in range(db + 1):
                if b[j]:
                    r[k + j] = sp.sub(r[k + j], sp.mul(c, b[j]))
    return q, r[:db]


def poly_gcd(a, b):
    """Monic gcd; raises ValueError when both arguments are zero."""
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    sp = a.spec
    if sp.is_prime:
        if b.spec is not sp:
            sp.check_same(b.spec)
        return FqPoly._raw(tuple(kernel.gcd(list(a.coeffs), list(b.coeffs), sp.p)), sp)
    while b:
        a, b = b, a % b
    return a.monic()


def enumerate_A(d, spec):
    """All polynomials of degree < d, lexicographic in (c_0, ..., c_{d-1})."""
    check_enumeration(spec.r**d, "A(d)")
    return [FqPoly(c, spec) for c in product(range(spec.r), repeat=d)]


class RatFunc:
    """Reduced fraction num/den with den monic."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _reduced=False):
        if den is None:
            den = FqPoly.one(num.spec)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        num.spec.check_same(den.spec)
        if not _reduced:
            if not num:
                den = FqPoly.one(num.spec)
            else:
                g = poly_gcd(num, den)
                if not g.is_one():
                    num, den = num // g, den // g
                lc = den.lc
                if lc != 1:
                    inv = num.spec.inv(lc)
                    num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den
        self._hash = None

    @property
    def spec(self):
        return self.num.spec

    @classmethod
    def from_int(cls, k, spec):
        return cls(FqPoly.const(k, spec), _reduced=True)

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def _coerce(self, o):
        if isinstance(o, RatFunc):
            return o
        if isinstance(o, FqPoly):
            return RatFunc(o, _reduced=True)
        if isinstance(o, int):
            return RatFunc.from_int(o, self.spec)
        return NotImplemented

    def __eq__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __add__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        if self.den.is_one():
            return RatFunc(self.num * o.den + o.num, o.den, _reduced=True)
        if o.den.is_one():
            return RatFunc(self.num + o.num * self.den, self.den, _reduced=True)
        g = poly_gcd(self.den, o.den)
        if g.is_one():
            return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)
        d1, d2 = self.den // g, o.den // g
        return RatFunc(self.num * d2 + o.num * d1, self.den * d2)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        if not self.num or not o.num:
            return RatFunc(FqPoly.zero(self.spec), _reduced=True)
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num * o.num, _reduced=True)
        # cross-cancel so the product is already reduced
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n = (self.num // g1) * (o.num // g2)
        d = (self.den // g2) * (o.den // g1)
        return RatFunc(n, d, _reduced=True)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, o):
        return self.inverse() * o

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num**k, self.den**k, _reduced=True)

    def __repr__(self):
        return f"RatFunc({format_ratfunc(self)!r}, r={self.spec.r})"

    def __str__(self):
        return format_ratfunc(self)


# text format


def _term(c, k):
    mag = "" if (c == 1 and k > 0) else str(c)
    if k == 0:
        body = str(c)
    elif k == 1:
        body = f"{mag}*T" if mag else "T"
    else:
        body = f"{mag}*T^{k}" if mag else f"T^{k}"
    return body


def format_poly(f, balanced=False):
    """Render decreasing-degree terms joined by " + " (and " - " when balanced)."""
    if not f.coeffs:
        return "0"
    parts = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        v = f.spec.balanced(c) if balanced else c
        neg = v < 0
        body = _term(-v if neg else v, k)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def format_ratfunc(q, balanced=False):
    if q.den.is_one():
        return format_poly(q.num, balanced)
    return f"{format_poly(q.num, balanced)} / {format_poly(q.den, balanced)}"


_TERM = re.compile(r"^(-?)(?:(\d+)(?:\*(T(?:\^(\d+))?))?|(T(?:\^(\d+))?))$")


def parse_poly(text, spec):
    """Inverse of :func:`format_poly` (either display mode)."""
    s = text.strip()
    if s == "0":
        return FqPoly.zero(spec)
    s = s.replace(" - ", " + -")
    coeffs = {}
    for tok in s.split(" + "):
        m = _TERM.match(tok.strip())
        if not m:
            raise ValueError(f"bad polynomial term {tok!r} in {text!r}")
        sign, num, tvar, texp, bare, bexp = m.groups()
        if num is not None:
            c = int(num)
            k = (int(texp) if texp else 1) if tvar else 0
        else:
            c = 1
            k = int(bexp) if bexp else 1
        if c >= spec.r:
            raise ValueError(f"coefficient {c} out of range for r={spec.r}")
        if sign:
            c = spec.neg(c)
        coeffs[k] = spec.add(coeffs.get(k, 0), c)
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return FqPoly(out, spec)


def parse_ratfunc(text, spec):
    if " / " in text:
        n, d = text.split(" / ")
        return RatFunc(parse_poly(n, spec), parse_poly(d, spec))
    return RatFunc(parse_poly(text, spec))


__all__ = [
    "FieldSpec",
    "FqPoly",
    "RatFunc",
    "enumerate_A",
    "format_poly",
    "format_ratfunc",
    "parse_poly",
    "parse_ratfunc",
    "poly_gcd",
]
