"""Identity-verification suites.

Each suite returns a list of ``Check`` records; a suite passes when every
check does.  The CLI ``verify`` command is a thin wrapper over these.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from . import hyper
from .carlitz import context
from .hasse import ht_derivative, ht_product_rule, ht_quotient_v1, ht_quotient_v2
from .poly import FqPoly, RatFunc
from .series import QQ, FunctionField, TruncSeries
from .stirling_carlitz import (
    delta_identity,
    sts_A,
    sts_A_via_linear_system,
    stf_A,
    verify_orthogonality,
)


@dataclass(frozen=True)
class Check:
    suite: str
    case: str
    ok: bool
    detail: str = ""


def orthogonality(r, max_n):
    rep = verify_orthogonality(r, max_n)
    bad = {(n, i) for _, n, i, _ in rep.violations}
    out = []
    for n in range(max_n + 1):
        for i in range(n + 1):
            out.append(Check("orthogonality", f"r={r} n={n} i={i}", (n, i) not in bad))
    return out


def delta(r, max_l):
    out = []
    for l in range(max_l + 1):
        v = delta_identity(r, l)
        out.append(Check("delta", f"r={r} l={l}", v == (1 if l == 0 else 0), str(v)))
    return out


def closed_form(r, max_n):
    """Closed forms against e_n expansion (first kind) and back-substitution (second)."""
    c = context(r)
    out = []
    for n in range(max_n + 1):
        en = c.e_n(n)
        ok1 = all(stf_A(r, n, i) == en.coeffs[i] for i in range(n + 1))
        ok2 = sts_A_via_linear_system(r, n) == [sts_A(r, n, j) for j in range(n + 1)]
        out.append(Check("closed-form", f"r={r} n={n} first", ok1))
        out.append(Check("closed-form", f"r={r} n={n} second", ok2))
    return out


def carlitz_coeffs(r, max_n=None):
    c = context(r)
    out = []
    for kind in ("BC", "CC"):
        ref = c.bc_cc_numbers(kind, max_n).values
        for variant in (1, 2):
            alt = c.bc_cc_quotient_rule(kind, max_n, variant).values
            for n, (x, y) in enumerate(zip(ref, alt)):
                out.append(Check("carlitz-coeffs", f"r={r} {kind}_{n} rule{variant}", x == y, str(x)))
        out.append(Check("carlitz-coeffs", f"r={r} {kind}_0 = 1", ref[0] == 1))
    return out


def random_rational_series(rng, order, unit=False):
    cs = []
    for m in range(order):
        if rng.random() < 0.25 and not (unit and m == 0):
            cs.append(Fraction(0))
        else:
            cs.append(Fraction(rng.randint(-9, 9), rng.randint(1, 6)))
    if unit and not cs[0]:
        cs[0] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))
    return TruncSeries(cs, QQ)


def random_ratfunc(rng, spec, nonzero=False):
    r = spec.r
    while True:
        num = FqPoly([rng.randrange(r) for _ in range(rng.randint(0, 3))], spec)
        if rng.random() < 0.3:
            den = FqPoly([rng.randrange(r) for _ in range(rng.randint(1, 2))] + [1], spec)
        else:
            den = FqPoly.one(spec)
        q = RatFunc(num, den)
        if q or not nonzero:
            return q


def random_function_field_series(rng, spec, order, unit=False):
    ring = FunctionField(spec)
    cs = [random_ratfunc(rng, spec, nonzero=(unit and m == 0)) for m in range(order)]
    return TruncSeries(cs, ring)


def ht_rules(count=100, order=10, max_n=5, r=3, seed=0):
    """Product rule (k = 2, 3) and both quotient rules against direct H^(n)."""
    from .ffield import FieldSpec

    rng = random.Random(seed)
    spec = FieldSpec.of(r)
    out = []
    for label, make in (
        ("QQ", lambda unit: random_rational_series(rng, order, unit)),
        (f"F_{r}(T)", lambda unit: random_function_field_series(rng, spec, order, unit)),
    ):
        for t in range(count):
            k = 2 + t % 2
            fs = [make(False) for _ in range(k)]
            f = make(True)
            prod = fs[0]
            for g in fs[1:]:
                prod = prod * g
            rec = f.reciprocal()
            for n in range(1, max_n + 1):
                direct = ht_derivative(prod, n)
                ok_p = ht_product_rule(fs, n) == direct
                d = ht_derivative(rec, n)
                ok_q1 = ht_quotient_v1(f, n) == d
                ok_q2 = ht_quotient_v2(f, n) == d
                case = f"{label} #{t} n={n}"
                out.append(Check("ht-rules", case + f" product k={k}", ok_p))
                out.append(Check("ht-rules", case + " quotient-1", ok_q1))
                out.append(Check("ht-rules", case + " quotient-2", ok_q2))
    return out


def compositions(max_N=3, max_n=6, max_k=4):
    out = []
    for kind in ("first", "second"):
        for N in range(1, max_N + 1):
            for n in range(max_n + 1):
                for k in range(1, max_k + 1):
                    lhs, rhs = hyper.composition_identity_sides(kind, N, n, k)
                    out.append(Check("compositions", f"{kind} N={N} n={n} k={k}", lhs == rhs, str(lhs)))
    return out


def cross_method(family, N, max_n):
    res, agree = hyper.cross_method(family, N, max_n)
    return [
        Check("cross-method", f"{family} N={N} n={n}", agree[n], str(res["series"][n]))
        for n in range(max_n + 1)
    ]


SUITES = {
    "orthogonality": orthogonality,
    "delta": delta,
    "closed-form": closed_form,
    "carlitz-coeffs": carlitz_coeffs,
    "ht-rules": ht_rules,
    "compositions": compositions,
    "cross-method": cross_method,
}
