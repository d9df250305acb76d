"""Carlitz-module arithmetic over F_r[T] and hypergeometric number families."""

from .carlitz import CarlitzContext, context
from .ffield import FieldSpec
from .hyper import assoc_stirling, hyper_numbers
from .kernel import BACKEND
from .poly import FqPoly, RatFunc
from .stirling_carlitz import stf_A, sts_A

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CarlitzContext",
    "FieldSpec",
    "FqPoly",
    "RatFunc",
    "assoc_stirling",
    "context",
    "hyper_numbers",
    "stf_A",
    "sts_A",
]
