"""Tests for the command registry."""

import pytest

from lsakit.commands import CheckCommand, CommandRegistry, register_default_commands
from lsakit.contracts import BaseCommand, CommandCall, CommandOutput, CommandStatus


class FailingCommand(BaseCommand):
    """Command that fails with a plain exception."""

    @property
    def name(self) -> str:
        return "failing"

    @property
    def description(self) -> str:
        return "A command that fails"

    async def execute(self, arguments: dict) -> CommandOutput:
        raise ValueError("Intentional failure")


def test_registry_initialization():
    """Test registry initialization."""
    registry = CommandRegistry()
    assert len(registry.list_commands()) == 0


def test_register_command():
    """Test registering a command."""
    registry = CommandRegistry()
    command = CheckCommand()

    registry.register(command)

    assert registry.get("check") is command
    assert registry.list_commands() == [
        {"name": "check", "description": "Check left-symmetry identities and completeness"}
    ]


def test_register_duplicate_command():
    """Test registering a duplicate verb fails."""
    registry = CommandRegistry()
    registry.register(CheckCommand())

    with pytest.raises(ValueError, match="already registered"):
        registry.register(CheckCommand())


def test_default_commands():
    registry = register_default_commands(CommandRegistry())
    names = [c["name"] for c in registry.list_commands()]

    assert names == ["catalog", "check", "classify", "decompose", "graph", "simple"]
    register_default_commands(registry)
    assert len(registry.list_commands()) == 6


@pytest.mark.asyncio
async def test_execute_check():
    """Test executing a verb via the registry."""
    registry = register_default_commands(CommandRegistry())

    result = await registry.execute(CommandCall(command="check", arguments={"source": "auslander3"}))

    assert result.status == CommandStatus.HOLDS
    assert result.report["completeness"]["verdict"] is True
    assert "left-symmetric: yes" in result.text


@pytest.mark.asyncio
async def test_execute_check_on_printed_table():
    registry = register_default_commands(CommandRegistry())

    result = await registry.execute(CommandCall(command="check", arguments={"source": "simple4_printed"}))

    assert result.exit_code == 1
    assert "complete: not checked" in result.text


@pytest.mark.asyncio
async def test_execute_unknown_source():
    registry = register_default_commands(CommandRegistry())

    result = await registry.execute(CommandCall(command="check", arguments={"source": "nowhere"}))

    assert result.status == CommandStatus.INPUT_ERROR
    assert "nowhere" in result.error


@pytest.mark.asyncio
async def test_execute_nonexistent_command():
    """Test executing a verb that doesn't exist."""
    registry = CommandRegistry()

    result = await registry.execute(CommandCall(command="nonexistent"))

    assert result.status == CommandStatus.INPUT_ERROR
    assert "not found" in result.error


@pytest.mark.asyncio
async def test_unexpected_exception_propagates():
    registry = CommandRegistry()
    registry.register(FailingCommand())

    with pytest.raises(ValueError, match="Intentional failure"):
        await registry.execute(CommandCall(command="failing"))

