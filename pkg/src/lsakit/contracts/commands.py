"""Command contracts and the base class for command-line verbs."""

from abc import ABC, abstractmethod
from datetime import datetime, timezone

UTC = timezone.utc
from enum import Enum
from typing import Any
from uuid import UUID, uuid4

from pydantic import BaseModel, Field

from ..errors import (
    EXIT_INCOMPLETE,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_PROPERTY_FAILS,
    IncompleteComputation,
    InputError,
    LsaError,
)


class CommandStatus(str, Enum):
    """Command outcome, one per exit code."""

    HOLDS = "holds"
    FAILS = "fails"
    INPUT_ERROR = "input_error"
    INCOMPLETE = "incomplete"

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self]

    @classmethod
    def for_error(cls, error: LsaError) -> "CommandStatus":
        if isinstance(error, InputError):
            return cls.INPUT_ERROR
        if isinstance(error, IncompleteComputation):
            return cls.INCOMPLETE
        return cls.FAILS


_EXIT_CODES = {
    CommandStatus.HOLDS: EXIT_OK,
    CommandStatus.FAILS: EXIT_PROPERTY_FAILS,
    CommandStatus.INPUT_ERROR: EXIT_INPUT_ERROR,
    CommandStatus.INCOMPLETE: EXIT_INCOMPLETE,
}


class CommandCall(BaseModel):
    """Request to run a command verb."""

    id: UUID = Field(default_factory=uuid4, description="Unique call identifier")
    command: str = Field(description="Verb to run")
    arguments: dict[str, Any] = Field(default_factory=dict, description="Parsed arguments")
    correlation_id: str | None = Field(default=None, description="Correlation ID for tracing")
    created_at: datetime = Field(
        default_factory=lambda: datetime.now(UTC), description="When the call was created"
    )

    model_config = {"use_enum_values": True}


class CommandResult(BaseModel):
    """Outcome of a command: status, JSON report and rendered text."""

    call_id: UUID = Field(description="ID of the originating CommandCall")
    command: str = Field(description="Verb that ran")
    status: CommandStatus = Field(description="Outcome")
    report: dict[str, Any] | None = Field(default=None, description="Machine-readable report")
    text: str = Field(default="", description="Human-readable rendering of the report")
    error: str | None = Field(default=None, description="Error message on failure")
    duration_ms: float | None = Field(default=None, description="Execution time in milliseconds")

    model_config = {"use_enum_values": True}

    @property
    def exit_code(self) -> int:
        return CommandStatus(self.status).exit_code

    def is_success(self) -> bool:
        return self.status == CommandStatus.HOLDS


class CommandOutput(BaseModel):
    """What a command's ``execute`` hands back before it is wrapped in a result."""

    holds: bool = Field(description="Whether every requested property holds")
    incomplete: bool = Field(default=False, description="Some part of the computation was left unfinished")
    report: dict[str, Any] = Field(default_factory=dict, description="Machine-readable report")
    text: str = Field(default="", description="Human-readable rendering")


class BaseCommand(ABC):
    """Abstract base class for command verbs.

    Subclasses provide ``name``, ``description`` and ``execute``; ``__call__``
    validates, times the run and turns toolkit errors into a result whose
    status carries the exit code. Other exceptions propagate.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        pass

    @abstractmethod
    async def execute(self, arguments: dict[str, Any]) -> CommandOutput:
        """Run the command.

        Raises:
            LsaError: On input errors, failed preconditions or incomplete computations
        """

    def validate_arguments(self, arguments: dict[str, Any]) -> dict[str, Any]:
        return arguments

    async def __call__(self, call: CommandCall) -> CommandResult:
        start_time = datetime.now(UTC)
        try:
            output = await self.execute(self.validate_arguments(call.arguments))
            if output.incomplete:
                status = CommandStatus.INCOMPLETE
            else:
                status = CommandStatus.HOLDS if output.holds else CommandStatus.FAILS
            return CommandResult(
                call_id=call.id,
                command=self.name,
                status=status,
                report=output.report,
                text=output.text,
                duration_ms=(datetime.now(UTC) - start_time).total_seconds() * 1000,
            )
        except LsaError as e:
            details = getattr(e, "details", None) or {}
            return CommandResult(
                call_id=call.id,
                command=self.name,
                status=CommandStatus.for_error(e),
                report={"error": type(e).__name__, "message": str(e)}
                | {k: str(v) for k, v in details.items()},
                text=f"error: {e}",
                error=str(e),
                duration_ms=(datetime.now(UTC) - start_time).total_seconds() * 1000,
            )
