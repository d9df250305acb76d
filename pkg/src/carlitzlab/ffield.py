"""Finite fields F_r with r = p**e.

Elements are stored as integer codes in ``range(r)``.  For a prime field
the code is the residue itself; for an extension field the base-p digits
of the code are the coefficient vector of the element over F_p, reduced
modulo a fixed monic irreducible polynomial.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .limits import FieldMismatch

_TABLE_LIMIT = 256


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(r):
    """Return (p, e) with r == p**e, or raise ValueError."""
    if r < 2:
        raise ValueError(f"field size must be >= 2, got {r}")
    p = next(d for d in range(2, r + 1) if r % d == 0)
    e, m = 0, r
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise ValueError(f"{r} is not a prime power")
    return p, e


def _digits(code, p, e):
    out = []
    for _ in range(e):
        code, d = divmod(code, p)
        out.append(d)
    return out


def _undigits(ds, p):
    code = 0
    for d in reversed(ds):
        code = code * p + d
    return code


def _polymod_p(a, m, p):
    """Remainder of the F_p polynomial ``a`` modulo monic ``m`` (little-endian lists)."""
    a = list(a)
    dm = len(m) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k] % p
        if c:
            for j in range(dm + 1):
                a[k - dm + j] = (a[k - dm + j] - c * m[j]) % p
    return [c % p for c in a[:dm]] + [0] * max(0, dm - len(a))


def _has_root_factor(m, p):
    """True if monic ``m`` has a monic factor of degree 1..deg(m)//2 over F_p."""
    e = len(m) - 1
    for d in range(1, e // 2 + 1):
        for low in product(range(p), repeat=d):
            if not any(_polymod_p(m, list(low) + [1], p)):
                return True
    return False


@lru_cache(maxsize=None)
def smallest_irreducible(p, e):
    """Smallest monic irreducible of degree e over F_p, ordered by its integer code.

    The code of ``c_0 + c_1 x + ... + x^e`` is ``sum c_i p**i``, which orders
    the candidates lexicographically by ``(c_{e-1}, ..., c_0)``.
    """
    if e == 1:
        return (0, 1)
    for code in range(p**e):
        cand = _digits(code, p, e) + [1]
        if cand[0] == 0:
            continue
        if not _has_root_factor(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    p: int
    e: int
    modulus: tuple = field(compare=False)

    @property
    def r(self):
        return self.p**self.e

    @property
    def is_prime(self):
        return self.e == 1

    @staticmethod
    def of(r):
        return _field_spec(r)

    def __repr__(self):
        return f"FieldSpec(r={self.r})"

    # scalar arithmetic on codes

    def add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out, place = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * place
            a //= p
            b //= p
            place *= p
        return out

    def neg(self, a):
        if self.e == 1:
            return -a % self.p
        return _undigits([-d % self.p for d in _digits(a, self.p, self.e)], self.p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.e == 1:
            return a * b % self.p
        tab = self._mul_table()
        if tab is not None:
            return tab[a * self.r + b]
        return self._mul_slow(a, b)

    def _mul_slow(self, a, b):
        p, e = self.p, self.e
        da, db = _digits(a, p, e), _digits(b, p, e)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return _undigits(_polymod_p(prod, self.modulus, p), p)

    def _mul_table(self):
        if self.r > _TABLE_LIMIT:
            return None
        return _mul_table(self)

    def pow(self, a, k):
        if self.e == 1:
            return pow(a, k, self.p)
        if k < 0:
            a, k = self.inv(a), -k
        out = 1
        while k:
            if k & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            k >>= 1
        return out

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_%d" % self.r)
        if self.e == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.r - 2)

    def frob(self, a, s=1):
        """a**(p**s); the identity whenever e divides s."""
        s %= self.e
        if s == 0 or a in (0, 1):
            return a
        return self.pow(a, self.p**s)

    def from_int(self, k):
        return k % self.p

    def balanced(self, a):
        """Signed display value for prime-subfield elements; other codes pass through."""
        if a < self.p and a > self.p // 2:
            return a - self.p
        return a

    def elements(self):
        return range(self.r)

    def check_same(self, other):
        if self != other:
            raise FieldMismatch(f"{self!r} vs {other!r}")


@lru_cache(maxsize=None)
def _field_spec(r):
    p, e = prime_power(r)
    return FieldSpec(p, e, smallest_irreducible(p, e))


@lru_cache(maxsize=None)
def _mul_table(spec):
    r = spec.r
    return tuple(spec._mul_slow(a, b) for a in range(r) for b in range(r))


class FieldElement:
    """An element of F_r bound to its FieldSpec."""

    __slots__ = ("rep", "spec")

    def __init__(self, rep, spec):
        if not 0 <= rep < spec.r:
            raise ValueError(f"code {rep} out of range for {spec!r}")
        self.rep = rep
        self.spec = spec

    @property
    def vector(self):
        return tuple(_digits(self.rep, self.spec.p, self.spec.e))

    def _other(self, o):
        if isinstance(o, int):
            return self.spec.from_int(o)
        self.spec.check_same(o.spec)
        return o.rep

    def __add__(self, o):
        return FieldElement(self.spec.add(self.rep, self._other(o)), self.spec)

    __radd__ = __add__

    def __sub__(self, o):
        return FieldElement(self.spec.sub(self.rep, self._other(o)), self.spec)

    def __rsub__(self, o):
        return FieldElement(self.spec.sub(self._other(o), self.rep), self.spec)

    def __neg__(self):
        return FieldElement(self.spec.neg(self.rep), self.spec)

    def __mul__(self, o):
        return FieldElement(self.spec.mul(self.rep, self._other(o)), self.spec)

    __rmul__ = __mul__

    def __truediv__(self, o):
        return FieldElement(self.spec.mul(self.rep, self.spec.inv(self._other(o))), self.spec)

    def __pow__(self, k):
        return FieldElement(self.spec.pow(self.rep, k), self.spec)

    def __eq__(self, o):
        if isinstance(o, int):
            return self.rep == self.spec.from_int(o)
        if isinstance(o, FieldElement):
            return self.spec == o.spec and self.rep == o.rep
        return NotImplemented

    def __hash__(self):
        return hash((self.rep, self.spec.r))

    def __bool__(self):
        return self.rep != 0

    def __repr__(self):
        return f"FieldElement({self.rep}, r={self.spec.r})"
