"""A-Stirling-Carlitz numbers of the first and second kind.

First kind: the coefficients of e_n(z) in the basis z**(r**i),

    stf_A(n, i) = (-1)**(n-i) * D_n / (D_i * L_{n-i}**(r**i)).

Second kind: the coefficients expressing z**(r**n) in the basis e_k(z),
with closed form D_n / (D_j * D_{n-j}**(r**j)).  Signs are field scalars,
so in characteristic 2 they vanish.
"""

from dataclasses import dataclass, field

from .carlitz import context
from .poly import FqPoly, RatFunc


def _ctx(r):
    return context(r)


def _sign(spec, k):
    return FqPoly.const(-1 if k % 2 else 1, spec)


def stf_A(r, n, i):
    """First-kind A-Stirling-Carlitz number as an exact quotient in F_r[T]."""
    if not 0 <= i <= n:
        raise IndexError(f"stf_A needs 0 <= i <= n, got n={n}, i={i}")
    c = _ctx(r)
    return c._memo(("stf", n, i), lambda: _stf(c, n, i))


def _stf(c, n, i):
    den = c.D(i) * c.power_r(c.L(n - i), i)
    return c.D(n).divexact(den) * _sign(c.spec, n - i)


def sts_A(r, n, j):
    """Second-kind A-Stirling-Carlitz number from the closed form."""
    if not 0 <= j <= n:
        raise IndexError(f"sts_A needs 0 <= j <= n, got n={n}, j={j}")
    c = _ctx(r)
    return c._memo(("sts", n, j), lambda: _sts(c, n, j))


def _sts(c, n, j):
    den = c.D(j) * c.power_r(c.D(n - j), j)
    return c.D(n).divexact(den)


def sts_A_via_linear_system(r, n):
    """Solve sum_k e_k(z) * x_k = z**(r**n) by back-substitution.

    e_k has leading term z**(r**k) with coefficient 1, so the system in the
    basis z**(r**i) is unitriangular: the coefficient of z**(r**i) gives
    x_i = [i == n] - sum_{k > i} x_k * stf(k, i).
    """
    c = _ctx(r)
    es = [c.e_n(k) for k in range(n + 1)]
    x = [None] * (n + 1)
    for i in range(n, -1, -1):
        lead = es[i].coeffs[i]
        if not lead.is_one():
            raise AssertionError(f"e_{i} is not monic in z")  # cannot happen
        acc = FqPoly.one(c.spec) if i == n else FqPoly.zero(c.spec)
        for k in range(i + 1, n + 1):
            acc = acc - x[k] * es[k].coeffs[i]
        x[i] = acc
    return x


def delta_identity(r, l):
    """sum_{a=0..l} (-1)**a / (L_a * D_{l-a}**(r**a)); equals 1 when l == 0, else 0."""
    c = _ctx(r)
    total = RatFunc(FqPoly.zero(c.spec))
    for a in range(l + 1):
        den = c.L(a) * c.power_r(c.D(l - a), a)
        total = total + RatFunc(_sign(c.spec, a), den)
    return total


def minus_one_power_identity(r, l):
    """(-1)**(r**l) == -1 in F_r, checked on field elements."""
    spec = _ctx(r).spec
    minus_one = spec.neg(1)
    return spec.pow(minus_one, r**l) == minus_one


@dataclass
class StirlingCarlitzTable:
    kind: str
    r: int
    max_n: int
    entries: dict = field(default_factory=dict)

    def __getitem__(self, nk):
        return self.entries[nk]

    def rows(self):
        for n in range(self.max_n + 1):
            for k in range(n + 1):
                yield n, k, self.entries[n, k]


def stirling_table(r, kind, max_n):
    fn = {"first": stf_A, "second": sts_A}.get(kind)
    if fn is None:
        raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")
    t = StirlingCarlitzTable(kind, r, max_n)
    for n in range(max_n + 1):
        for k in range(n + 1):
            t.entries[n, k] = fn(r, n, k)
    return t


@dataclass
class OrthogonalityReport:
    r: int
    max_n: int
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def verify_orthogonality(r, max_n):
    """Check both inverse-matrix identities for all i <= n <= max_n."""
    rep = OrthogonalityReport(r, max_n)
    for n in range(max_n + 1):
        for i in range(n + 1):
            want = 1 if n == i else 0
            s1 = sum((stf_A(r, k, i) * sts_A(r, n, k) for k in range(i, n + 1)),
                     FqPoly.zero(_ctx(r).spec))
            s2 = sum((sts_A(r, k, i) * stf_A(r, n, k) for k in range(i, n + 1)),
                     FqPoly.zero(_ctx(r).spec))
            rep.checked += 2
            if s1 != want:
                rep.violations.append(("first-second", n, i, str(s1)))
            if s2 != want:
                rep.violations.append(("second-first", n, i, str(s2)))
    return rep
