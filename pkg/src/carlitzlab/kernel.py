"""Selects the polynomial kernel backend at import.

The compiled extension is used when it was built and ``CARLITZLAB_PURE``
is unset; otherwise the pure-Python module stands in.  Large products go
through Kronecker substitution on Python integers under either backend.
"""

import os

from . import _kernels_py

if os.environ.get("CARLITZLAB_PURE"):
    _backend = _kernels_py
else:
    try:
        from . import _kernels as _backend
    except ImportError:  # extension not built
        _backend = _kernels_py

BACKEND = "compiled" if _backend is not _kernels_py else "python"

# Below this operand length schoolbook beats packing into a big integer.
KRONECKER_THRESHOLD = 48


def kronecker_mul(a, b, p):
    """Multiply by packing both operands into integers, one slot per coefficient."""
    if not a or not b:
        return []
    bound = min(len(a), len(b)) * (p - 1) ** 2
    width = (bound.bit_length() + 7) // 8 or 1
    x = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in a), "little")
    y = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in b), "little")
    n = len(a) + len(b) - 1
    raw = (x * y).to_bytes(n * width, "little")
    out = [
        int.from_bytes(raw[i : i + width], "little") % p
        for i in range(0, n * width, width)
    ]
    while out and not out[-1]:
        out.pop()
    return out


def mul(a, b, p):
    if min(len(a), len(b)) >= KRONECKER_THRESHOLD:
        return kronecker_mul(a, b, p)
    return _backend.mul(a, b, p)


def divmod_(a, b, p):
    return _backend.divmod_(a, b, p)


def use_backend(name):
    """Switch backend at runtime ("compiled" or "python"); for benchmarks and tests."""
    global _backend, BACKEND
    if name == "python":
        _backend = _kernels_py
    elif name == "compiled":
        from . import _kernels

        _backend = _kernels
    else:
        raise ValueError(name)
    BACKEND = name


def gcd(a, b, p):
    return _backend.gcd(a, b, p)
