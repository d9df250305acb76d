"""Command-line interface.

Exit codes: 0 success, 2 bad arguments, 3 a size guard tripped,
4 an identity check or cross-method comparison failed.
"""

import argparse
import sys

from . import hyper, verify
from .carlitz import context
from .limits import GuardExceeded, set_limits
from .poly import format_poly, format_ratfunc
from .records import OutputRecord, write_csv
from .stirling_carlitz import stf_A, sts_A

EXIT_GUARD = 3
EXIT_MISMATCH = 4


def _poly(f, args):
    return format_poly(f, balanced=args.balanced)


def _rat(q, args):
    return format_ratfunc(q, balanced=args.balanced)


def _carlitz_params(args, **extra):
    p = {"r": args.r}
    if args.balanced:
        p["balanced"] = True
    p.update(extra)
    return p


def cmd_brackets(args):
    c = context(args.r)
    recs, lines = [], []
    params = _carlitz_params(args, max_n=args.max_n)
    for i in range(args.max_n + 1):
        items = [("D", c.D(i)), ("L", c.L(i))]
        if i >= 1:
            items.insert(0, ("bracket", c.bracket(i)))
        for name, val in items:
            s = _poly(val, args)
            recs.append(OutputRecord("brackets", params, s, "recurrence", quantity=name, n=i))
            label = f"[{i}]" if name == "bracket" else f"{name}_{i}"
            lines.append(f"{label} = {s}")
    return recs, lines, 0


def cmd_en(args):
    c = context(args.r)
    e = c.e_n(args.n)
    params = _carlitz_params(args, n=args.n)
    recs = [
        OutputRecord("en", params, _poly(coef, args), "product-expansion",
                     quantity=f"coeff z^{args.r ** i}", n=args.n, k=i)
        for i, coef in enumerate(e.coeffs)
    ]
    return recs, [f"e_{args.n}(z) = {e.format(balanced=args.balanced)}"], 0


def cmd_stirling_a(args):
    fn, sym = (stf_A, "stf_A") if args.kind == "first" else (sts_A, "sts_A")
    params = _carlitz_params(args, kind=args.kind, max_n=args.max_n)
    recs, lines = [], []
    for n in range(args.max_n + 1):
        for k in range(n + 1):
            s = _poly(fn(args.r, n, k), args)
            recs.append(OutputRecord("stirling-a", params, s, "closed-form",
                                     quantity=sym, n=n, k=k))
            lines.append(f"{sym}({n}, {k}) = {s}")
    return recs, lines, 0


def _cmd_bc_cc(kind, args):
    c = context(args.r)
    max_n = args.max_n if args.max_n is not None else args.r**2
    seq = c.bc_cc_numbers(kind, max_n)
    params = _carlitz_params(args, max_n=max_n)
    cmd = kind.lower()
    recs, lines = [], []
    for n, v in enumerate(seq.values):
        s = _rat(v, args)
        recs.append(OutputRecord(cmd, params, s, "series-inversion", quantity=kind, n=n))
        lines.append(f"{kind}_{n} = {s}")
    return recs, lines, 0


def _cmd_hyper(family, args):
    cmd = family.lower()
    sym = "B" if family == "HB" else "c"
    params = {"N": args.N, "max_n": args.max_n, "method": args.method}
    recs, lines = [], []
    if args.method != "all":
        seq = hyper.hyper_numbers(family, args.N, args.max_n, args.method)
        for n, v in enumerate(seq.values):
            recs.append(OutputRecord(cmd, params, str(v), args.method, quantity=family, n=n))
            lines.append(f"{sym}_{{{args.N},{n}}} = {v}")
        return recs, lines, 0
    res, agree = hyper.cross_method(family, args.N, args.max_n)
    for n in range(args.max_n + 1):
        for m in hyper.METHODS:
            recs.append(OutputRecord(cmd, params, str(res[m][n]), m,
                                     quantity=family, n=n, match=agree[n]))
        cols = "  ".join(f"{m}={res[m][n]}" for m in hyper.METHODS)
        lines.append(f"{sym}_{{{args.N},{n}}}  {cols}  {'match' if agree[n] else 'MISMATCH'}")
    return recs, lines, 0 if all(agree) else EXIT_MISMATCH


def cmd_assoc_stirling(args):
    sym = "stf" if args.kind == "first" else "sts"
    params = {"kind": args.kind, "m": args.m}
    if args.n is not None:
        cells = [(args.n, args.k)] if args.k is not None else [(args.n, k) for k in range(args.n + 1)]
        params["n"] = args.n
        if args.k is not None:
            params["k"] = args.k
    else:
        params["max_n"] = args.max_n
        cells = [(n, k) for n in range(args.max_n + 1) for k in range(n + 1)]
    recs, lines = [], []
    for n, k in cells:
        v = hyper.assoc_stirling(args.kind, args.m, n, k)
        recs.append(OutputRecord("assoc-stirling", params, str(v), "generating-function",
                                 quantity=f"{sym}_>={args.m}", n=n, k=k))
        lines.append(f"{sym}_>={args.m}({n}, {k}) = {v}")
    return recs, lines, 0


def cmd_verify(args):
    suite = args.suite
    if suite == "orthogonality":
        checks = verify.orthogonality(args.r, args.max_n)
        params = {"r": args.r, "max_n": args.max_n}
    elif suite == "delta":
        checks = verify.delta(args.r, args.max_l)
        params = {"r": args.r, "max_l": args.max_l}
    elif suite == "closed-form":
        checks = verify.closed_form(args.r, args.max_n)
        params = {"r": args.r, "max_n": args.max_n}
    elif suite == "carlitz-coeffs":
        checks = verify.carlitz_coeffs(args.r, args.max_n)
        params = {"r": args.r}
    elif suite == "ht-rules":
        checks = verify.ht_rules(args.count, args.order, args.max_n, args.r, args.seed)
        params = {"r": args.r, "count": args.count, "order": args.order,
                  "max_n": args.max_n, "seed": args.seed}
    elif suite == "compositions":
        checks = verify.compositions(args.max_N, args.max_n, args.max_k)
        params = {"max_N": args.max_N, "max_n": args.max_n, "max_k": args.max_k}
    else:
        checks = verify.cross_method(args.family, args.N, args.max_n)
        params = {"family": args.family, "N": args.N, "max_n": args.max_n}
    recs = [
        OutputRecord("verify", params, "pass" if c.ok else "fail", suite,
                     quantity=c.case, detail=c.detail or None)
        for c in checks
    ]
    lines = [f"{'PASS' if c.ok else 'FAIL'}  {c.case}" for c in checks]
    failed = sum(not c.ok for c in checks)
    lines.append(f"{suite}: {len(checks) - failed}/{len(checks)} passed")
    return recs, lines, 0 if not failed else EXIT_MISMATCH


def _common(p):
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--balanced", action="store_true",
                   help="signed coefficient display (-1 instead of p-1)")
    p.add_argument("--unsafe-limits", action="store_true",
                   help="lift the degree and enumeration guards")


# verify defaults differ per suite; None means "use the suite default"
_VERIFY_DEFAULTS = {
    "orthogonality": {"max_n": 4},
    "delta": {},
    "closed-form": {"max_n": 3},
    "carlitz-coeffs": {"max_n": None},
    "ht-rules": {"max_n": 5},
    "compositions": {"max_n": 6},
    "cross-method": {"max_n": 8},
}


def build_parser():
    ap = argparse.ArgumentParser(prog="carlitzlab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("brackets", help="[i], D_i and L_i")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-n", type=int, default=3)
    _common(p)
    p.set_defaults(fn=cmd_brackets)

    p = sub.add_parser("en", help="coefficients of e_n(z)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _common(p)
    p.set_defaults(fn=cmd_en)

    p = sub.add_parser("stirling-a", help="A-Stirling-Carlitz table")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kind", choices=["first", "second"], default="first")
    p.add_argument("--max-n", type=int, default=3)
    _common(p)
    p.set_defaults(fn=cmd_stirling_a)

    for name, kind in (("bc", "BC"), ("cc", "CC")):
        p = sub.add_parser(name, help=f"{kind}_n for n <= max-n")
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--max-n", type=int, default=None)
        _common(p)
        p.set_defaults(fn=lambda a, _k=kind: _cmd_bc_cc(_k, a))

    for name, fam in (("hb", "HB"), ("hc", "HC")):
        p = sub.add_parser(name, help=f"hypergeometric {'Bernoulli' if fam == 'HB' else 'Cauchy'} numbers")
        p.add_argument("--N", type=int, required=True)
        p.add_argument("--max-n", type=int, default=8)
        p.add_argument("--method", choices=list(hyper.METHODS) + ["all"], default="series")
        _common(p)
        p.set_defaults(fn=lambda a, _f=fam: _cmd_hyper(_f, a))

    p = sub.add_parser("assoc-stirling", help="associated Stirling numbers")
    p.add_argument("--kind", choices=["first", "second"], required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--n", type=int, default=None, help="query a single row")
    p.add_argument("--k", type=int, default=None, help="with --n, a single cell")
    _common(p)
    p.set_defaults(fn=cmd_assoc_stirling)

    p = sub.add_parser("verify", help="run an identity-verification suite")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--max-n", type=int, default=argparse.SUPPRESS)
    p.add_argument("--max-l", type=int, default=6)
    p.add_argument("--max-k", type=int, default=4)
    p.add_argument("--max-N", type=int, default=3)
    p.add_argument("--N", type=int, default=3)
    p.add_argument("--family", choices=["hb", "hc"], default="hc")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    _common(p)
    p.set_defaults(fn=cmd_verify)
    return ap


def _emit(recs, lines, fmt, out):
    if fmt == "json":
        for r in recs:
            out.write(r.to_json() + "\n")
    elif fmt == "csv":
        write_csv(recs, out)
    else:
        for line in lines:
            out.write(line + "\n")


def main(argv=None, out=None):
    out = out or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "verify":
        if not hasattr(args, "max_n"):
            args.max_n = _VERIFY_DEFAULTS[args.suite].get("max_n")
        args.family = args.family.upper()
    for name in ("r", "N", "m", "max_n", "n"):
        v = getattr(args, name, None)
        if v is not None and v < (0 if name in ("max_n", "n") else 1):
            ap.error(f"--{name.replace('_', '-')} out of range: {v}")
    if getattr(args, "r", None) is not None:
        from .ffield import prime_power

        try:
            prime_power(args.r)
        except ValueError as exc:
            ap.error(str(exc))
    if args.unsafe_limits:
        print("warning: size guards disabled (--unsafe-limits)", file=sys.stderr)
        set_limits(max_degree=10**12, max_enumeration=2**48)
    try:
        recs, lines, code = args.fn(args)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    _emit(recs, lines, args.format, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
