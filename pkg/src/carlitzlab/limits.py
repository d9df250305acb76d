"""Resource guards and the exceptions raised when they trip."""

import os
import threading

DEFAULT_MAX_DEGREE = 10**6
DEFAULT_MAX_ENUMERATION = 2**24


class GuardExceeded(ArithmeticError):
    """A computation would exceed a configured size limit."""


class InexactDivision(ArithmeticError):
    """Exact division left a nonzero remainder.

    Raised where the mathematics guarantees divisibility, so it always
    indicates a bug or a corrupted input, never a recoverable condition.
    """


class FieldMismatch(ValueError):
    """Operands live over different finite fields."""


_lock = threading.Lock()
_limits = {
    "max_degree": int(os.environ.get("CARLITZ_MAX_DEGREE", DEFAULT_MAX_DEGREE)),
    "max_enumeration": DEFAULT_MAX_ENUMERATION,
}


def max_degree():
    return _limits["max_degree"]


def max_enumeration():
    return _limits["max_enumeration"]


def set_limits(max_degree=None, max_enumeration=None):
    """Override the guards process-wide; ``None`` leaves a limit unchanged."""
    with _lock:
        if max_degree is not None:
            _limits["max_degree"] = int(max_degree)
        if max_enumeration is not None:
            _limits["max_enumeration"] = int(max_enumeration)


def check_degree(deg, what="polynomial"):
    if deg > _limits["max_degree"]:
        raise GuardExceeded(
            f"{what} degree {deg} exceeds cap {_limits['max_degree']}"
        )


def check_enumeration(count, what="enumeration"):
    if count > _limits["max_enumeration"]:
        raise GuardExceeded(
            f"{what} size {count} exceeds cap {_limits['max_enumeration']}"
        )
