"""Completeness criteria and the identities of the unital extension."""

from .criteria import check_all_criteria, identity_report, is_complete, sample_points
from .lemmas import (
    ConjugationCheck,
    EigenfunctionCheck,
    TraceInvariants,
    trace_diagonal,
    trace_invariants,
    verify_conjugation_identity,
    verify_eigenfunction,
)

__all__ = [
    "ConjugationCheck",
    "EigenfunctionCheck",
    "TraceInvariants",
    "check_all_criteria",
    "identity_report",
    "is_complete",
    "sample_points",
    "trace_diagonal",
    "trace_invariants",
    "verify_conjugation_identity",
    "verify_eigenfunction",
]
