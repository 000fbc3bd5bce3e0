"""Report and command contracts."""

from .commands import BaseCommand, CommandCall, CommandOutput, CommandResult, CommandStatus
from .reports import (
    CanonicalReport,
    CheckModel,
    ClassificationReport,
    CompletenessReport,
    CorollaryReport,
    Criterion,
    CriterionResult,
    DecompositionModel,
    FamilyModel,
    GraphModel,
    IdentityReport,
    PartModel,
    PropertyReport,
    PropertyResult,
    SimplicityReport,
)

__all__ = [
    "BaseCommand",
    "CanonicalReport",
    "CheckModel",
    "ClassificationReport",
    "CommandCall",
    "CommandOutput",
    "CommandResult",
    "CommandStatus",
    "CompletenessReport",
    "CorollaryReport",
    "Criterion",
    "CriterionResult",
    "DecompositionModel",
    "FamilyModel",
    "GraphModel",
    "IdentityReport",
    "PartModel",
    "PropertyReport",
    "PropertyResult",
    "SimplicityReport",
]
