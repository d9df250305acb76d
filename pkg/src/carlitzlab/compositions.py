"""Odometer enumeration of integer compositions.

Both generators yield tuples in colexicographic order (ordered by the
reversed tuple).  Counts are C(n+k-1, k-1) for weak compositions and
C(n-1, k-1) for strict ones.
"""

from math import comb


def weak_compositions(n, k):
    """Tuples of k non-negative integers summing to n."""
    if k == 0:
        if n == 0:
            yield ()
        return
    a = [0] * k
    a[0] = n
    while True:
        yield tuple(a)
        i = 0
        while i < k - 1 and a[i] == 0:
            i += 1
        if i == k - 1:
            return
        v = a[i]
        a[i] = 0
        a[0] = v - 1
        a[i + 1] += 1


def strict_compositions(n, k):
    """Tuples of k positive integers summing to n."""
    if n < k:
        return
    for w in weak_compositions(n - k, k):
        yield tuple(x + 1 for x in w)


def count_weak(n, k):
    if k == 0:
        return 1 if n == 0 else 0
    return comb(n + k - 1, k - 1)


def count_strict(n, k):
    if k == 0:
        return 1 if n == 0 else 0
    return comb(n - 1, k - 1) if n >= k else 0
