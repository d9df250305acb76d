"""Pure-Python polynomial kernels over a prime field.

Polynomials are little-endian lists of ints in ``range(p)`` with no
trailing zeros; the zero polynomial is ``[]``.  Same contract as the
compiled ``_kernels`` extension.
"""


def _trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def mul(a, b, p):
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    res = [0] * (len(a) + len(b) - 1)
    nz_a = [(i, c) for i, c in enumerate(a) if c]
    for j, bj in enumerate(b):
        if not bj:
            continue
        for i, ai in nz_a:
            res[i + j] += ai * bj
    return _trim([c % p for c in res])


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) <= db:
        return [], list(a)
    inv = pow(b[-1], -1, p)
    nz_b = [(j, c) for j, c in enumerate(b[:-1]) if c]
    r = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db] % p
        if c:
            c = c * inv % p
            q[k] = c
            for j, bj in nz_b:
                r[k + j] -= c * bj
    return _trim(q), _trim([c % p for c in r[:db]])


def gcd(a, b, p):
    """Monic gcd by Euclid; ``gcd([], [])`` is ``[]``."""
    a, b = list(a), list(b)
    while b:
        a, b = b, divmod_(a, b, p)[1]
    if a and a[-1] != 1:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a
