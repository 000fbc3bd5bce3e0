"""Tests for command and report contracts."""

from datetime import datetime
from uuid import uuid4

import pytest

from lsakit.contracts import (
    BaseCommand,
    CommandCall,
    CommandOutput,
    CommandResult,
    CommandStatus,
    CompletenessReport,
    Criterion,
    CriterionResult,
    PropertyReport,
    PropertyResult,
)
from lsakit.errors import BadParameters, NotComplete, SolverIncomplete


class HoldsCommand(BaseCommand):
    """Command whose property holds when asked to."""

    @property
    def name(self) -> str:
        return "holds"

    @property
    def description(self) -> str:
        return "A command for testing"

    async def execute(self, arguments: dict) -> CommandOutput:
        return CommandOutput(holds=arguments.get("holds", True), report={"echo": arguments}, text="done")


class RaisingCommand(BaseCommand):
    """Command that raises the error it is given."""

    def __init__(self, error: Exception):
        self.error = error

    @property
    def name(self) -> str:
        return "raising"

    @property
    def description(self) -> str:
        return "A command that raises"

    async def execute(self, arguments: dict) -> CommandOutput:
        raise self.error


def test_command_call_creation():
    """Test creating a command call."""
    call = CommandCall(command="check", arguments={"source": "auslander3"})

    assert call.command == "check"
    assert call.arguments == {"source": "auslander3"}
    assert call.id is not None
    assert isinstance(call.created_at, datetime)


def test_command_result_exit_codes():
    result = CommandResult(call_id=uuid4(), command="check", status=CommandStatus.FAILS)

    assert result.exit_code == 1
    assert not result.is_success()
    assert CommandStatus.HOLDS.exit_code == 0
    assert CommandStatus.INPUT_ERROR.exit_code == 2
    assert CommandStatus.INCOMPLETE.exit_code == 3


@pytest.mark.parametrize(
    "error, status",
    [
        (BadParameters("bad"), CommandStatus.INPUT_ERROR),
        (NotComplete("no"), CommandStatus.FAILS),
        (SolverIncomplete("stuck"), CommandStatus.INCOMPLETE),
    ],
)
def test_status_for_error(error, status):
    assert CommandStatus.for_error(error) == status


@pytest.mark.asyncio
async def test_base_command_success():
    """Test executing a command successfully."""
    result = await HoldsCommand()(CommandCall(command="holds", arguments={"x": 1}))

    assert result.status == CommandStatus.HOLDS
    assert result.report == {"echo": {"x": 1}}
    assert result.text == "done"
    assert result.duration_ms is not None
    assert result.duration_ms >= 0


@pytest.mark.asyncio
async def test_base_command_property_fails():
    result = await HoldsCommand()(CommandCall(command="holds", arguments={"holds": False}))

    assert result.status == CommandStatus.FAILS
    assert result.exit_code == 1
    assert result.error is None


@pytest.mark.asyncio
async def test_base_command_error_details():
    """Test that toolkit errors become results carrying their details."""
    command = RaisingCommand(NotComplete("not complete", witness="e"))
    result = await command(CommandCall(command="raising"))

    assert result.status == CommandStatus.FAILS
    assert result.report == {"error": "NotComplete", "message": "not complete", "witness": "e"}
    assert result.text == "error: not complete"


@pytest.mark.asyncio
async def test_base_command_lets_other_exceptions_through():
    with pytest.raises(ZeroDivisionError):
        await RaisingCommand(ZeroDivisionError("division by zero"))(CommandCall(command="raising"))


class TestReports:
    def test_completeness_consistency(self):
        report = CompletenessReport(
            algebra="a",
            verdict=True,
            criteria=[
                CriterionResult(criterion=Criterion.TRACE, description="d", holds=True),
                CriterionResult(criterion=Criterion.NILPOTENT, description="a", holds=True, conclusive=False),
            ],
        )
        assert report.consistent()
        assert report.get("d").holds
        assert report.get(Criterion.DET_ONE) is None

    def test_conclusive_disagreement_is_inconsistent(self):
        report = CompletenessReport(
            algebra="a",
            verdict=True,
            criteria=[CriterionResult(criterion=Criterion.DET_ONE, description="b", holds=False)],
        )
        assert not report.consistent()

    def test_property_report(self):
        report = PropertyReport(
            kind="left",
            results=[
                PropertyResult(name="l1", holds=True),
                PropertyResult(name="l2", holds=False, witness=["1", "3"]),
            ],
        )
        assert report.failed() == ["l2"]
        assert not report.all_hold()
        assert report.get("l2").witness == ["1", "3"]
