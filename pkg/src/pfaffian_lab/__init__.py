"""Exact arithmetic and verifiers for Pfaffian identities, minor summation formulas and q-series."""

from .combinat import Partition
from .exactring import Poly, RationalFunction, TruncationPolicy
from .identities import IdentityParams, VerificationReport, known_ids, run_one, run_suite
from .linalg import Matrix, SkewMatrix, det, pfaffian

__version__ = "0.1.0"

__all__ = [
    "IdentityParams",
    "Matrix",
    "Partition",
    "Poly",
    "RationalFunction",
    "SkewMatrix",
    "TruncationPolicy",
    "VerificationReport",
    "det",
    "known_ids",
    "pfaffian",
    "run_one",
    "run_suite",
]
