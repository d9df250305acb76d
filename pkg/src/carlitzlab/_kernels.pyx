# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled polynomial kernels over a prime field (see ``_kernels_py``)."""

from libc.stdlib cimport malloc, calloc, free

ctypedef unsigned long long u64


cdef u64* _load(list a, u64 p) except NULL:
    cdef Py_ssize_t n = len(a), i
    cdef u64* out = <u64*>malloc((n if n > 0 else 1) * sizeof(u64))
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        out[i] = (<u64>a[i]) % p
    return out


cdef list _dump(u64* c, Py_ssize_t n, u64 p):
    while n > 0 and c[n - 1] % p == 0:
        n -= 1
    return [c[i] % p for i in range(n)]


def mul(list a, list b, long long p):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    if p < 2 or p >= 4294967296:
        raise ValueError("modulus out of range for compiled kernel")
    cdef u64 P = <u64>p
    cdef u64 sq = (P - 1) * (P - 1)
    cdef u64 lim = (<u64>-1) // sq if sq > 0 else <u64>-1
    cdef bint lazy = <u64>(na if na < nb else nb) <= lim
    cdef u64* A = _load(a, P)
    cdef u64* B = _load(b, P)
    cdef u64* R = <u64*>calloc(na + nb - 1, sizeof(u64))
    cdef u64 bj
    if R == NULL:
        free(A); free(B)
        raise MemoryError()
    try:
        for j in range(nb):
            bj = B[j]
            if bj == 0:
                continue
            if lazy:
                for i in range(na):
                    R[i + j] += A[i] * bj
            else:
                for i in range(na):
                    R[i + j] = (R[i + j] + (A[i] * bj) % P) % P
        return _dump(R, na + nb - 1, P)
    finally:
        free(A); free(B); free(R)


def divmod_(list a, list b, long long p):
    cdef Py_ssize_t na = len(a), nb = len(b), k, j, db
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = nb - 1
    if na <= db:
        return [], list(a)
    cdef u64 P = <u64>p
    cdef u64 inv = <u64>pow(int(b[db]) % p, -1, p)
    cdef u64* Rm = _load(a, P)
    cdef u64* B = _load(b, P)
    cdef u64* Q = <u64*>calloc(na - db, sizeof(u64))
    cdef u64 c, negc
    try:
        for k in range(na - 1 - db, -1, -1):
            c = Rm[k + db]
            if c == 0:
                continue
            c = (c * inv) % P
            Q[k] = c
            negc = P - c
            for j in range(db):
                if B[j]:
                    Rm[k + j] = (Rm[k + j] + (negc * B[j]) % P) % P
        return _dump(Q, na - db, P), _dump(Rm, db, P)
    finally:
        free(Rm); free(B); free(Q)


cdef Py_ssize_t _rem_inplace(u64* A, Py_ssize_t na, u64* B, Py_ssize_t nb, u64 P):
    # A <- A mod B, both trimmed; returns the new length of A
    cdef Py_ssize_t k, j, db = nb - 1
    cdef u64 inv, c, negc
    if na < nb:
        return na
    inv = _inv(B[db], P)
    for k in range(na - 1 - db, -1, -1):
        c = A[k + db]
        if c == 0:
            continue
        c = (c * inv) % P
        negc = P - c
        for j in range(db + 1):
            if B[j]:
                A[k + j] = (A[k + j] + (negc * B[j]) % P) % P
    k = db
    while k > 0 and A[k - 1] == 0:
        k -= 1
    return k


cdef u64 _inv(u64 a, u64 P):
    # Fermat: a**(P-2) mod P, P prime
    cdef u64 result = 1, e = P - 2
    a %= P
    while e:
        if e & 1:
            result = (result * a) % P
        a = (a * a) % P
        e >>= 1
    return result


def gcd(list a, list b, long long p):
    cdef Py_ssize_t na = len(a), nb = len(b), i, t
    cdef u64 P = <u64>p
    cdef u64* A = _load(a, P)
    cdef u64* B = _load(b, P)
    cdef u64* tmp
    cdef u64 inv
    try:
        while na > 0 and A[na - 1] == 0:
            na -= 1
        while nb > 0 and B[nb - 1] == 0:
            nb -= 1
        while nb > 0:
            na = _rem_inplace(A, na, B, nb, P)
            tmp = A; A = B; B = tmp
            t = na; na = nb; nb = t
        if na == 0:
            return []
        inv = _inv(A[na - 1], P)
        return [(A[i] * inv) % P for i in range(na)]
    finally:
        free(A); free(B)
