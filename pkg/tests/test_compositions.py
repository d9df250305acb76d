import itertools

import pytest

from carlitzlab.compositions import count_strict, count_weak, strict_compositions, weak_compositions


def brute(n, k, low):
    return [c for c in itertools.product(range(low, n + 1), repeat=k) if sum(c) == n]


@pytest.mark.parametrize("n", range(0, 7))
@pytest.mark.parametrize("k", range(0, 5))
def test_weak(n, k):
    got = list(weak_compositions(n, k))
    assert sorted(got) == sorted(brute(n, k, 0))
    assert len(got) == count_weak(n, k)
    assert got == sorted(got, key=lambda t: t[::-1])  # colex


@pytest.mark.parametrize("n", range(0, 8))
@pytest.mark.parametrize("k", range(0, 6))
def test_strict(n, k):
    got = list(strict_compositions(n, k))
    assert sorted(got) == sorted(brute(n, k, 1))
    assert len(got) == count_strict(n, k)
    assert got == sorted(got, key=lambda t: t[::-1])
