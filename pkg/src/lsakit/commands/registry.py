"""Command registry for looking up and running command verbs."""

from typing import Any

from ..config import get_settings
from ..contracts import BaseCommand, CommandCall, CommandResult, CommandStatus
from ..tracing import TraceEvent, get_tracer


class CommandRegistry:
    """
    Registry for command lookup and execution.

    Provides:
    - Command registration and lookup by verb
    - Execution tracing with correlation IDs
    """

    def __init__(self):
        """Initialize the command registry."""
        self.settings = get_settings()
        self.tracer = get_tracer()

        self._commands: dict[str, BaseCommand] = {}

        self.tracer.debug("Command registry initialized")

    def register(self, command: BaseCommand) -> None:
        """
        Register a command.

        Args:
            command: Command instance to register

        Raises:
            ValueError: If the verb is already registered
        """
        if command.name in self._commands:
            raise ValueError(f"Command '{command.name}' is already registered")

        self._commands[command.name] = command
        self.tracer.debug(f"Registered command: {command.name}")

    def get(self, name: str) -> BaseCommand | None:
        """
        Get a registered command by verb.

        Args:
            name: Verb of the command

        Returns:
            Command instance or None if not found
        """
        return self._commands.get(name)

    def list_commands(self) -> list[dict[str, Any]]:
        """
        List all registered commands with their descriptions.

        Returns:
            List of command info dictionaries, sorted by verb
        """
        return [
            {"name": command.name, "description": command.description}
            for _, command in sorted(self._commands.items())
        ]

    async def execute(self, call: CommandCall) -> CommandResult:
        """
        Execute a command call.

        Args:
            call: Command call to execute

        Returns:
            Command result; an unknown verb gives an input-error result
        """
        command = self.get(call.command)
        if not command:
            self.tracer.error(f"Command not found: {call.command}")
            return CommandResult(
                call_id=call.id,
                command=call.command,
                status=CommandStatus.INPUT_ERROR,
                error=f"Command '{call.command}' not found in registry",
                text=f"error: unknown command {call.command}",
            )

        correlation_id = call.correlation_id or self.tracer.generate_correlation_id()
        self.tracer.trace(TraceEvent.COMMAND_START, correlation_id=correlation_id, preview=call.command)

        try:
            result = await command(call)
        except Exception:
            self.tracer.exception(f"Command {call.command} crashed")
            raise

        self.tracer.trace(
            TraceEvent.COMMAND_END,
            correlation_id=correlation_id,
            duration_ms=result.duration_ms,
            ok=result.status != CommandStatus.INPUT_ERROR,
            error=result.error,
            preview=call.command,
            status=result.status,
        )
        if result.error:
            self.tracer.debug(f"Command {call.command} ended with {result.status}: {result.error}")

        return result


# Global registry singleton
_registry: CommandRegistry | None = None


def get_registry() -> CommandRegistry:
    """
    Get the global command registry singleton.

    Returns:
        Command registry instance
    """
    global _registry
    if _registry is None:
        _registry = CommandRegistry()
    return _registry


def register_command(command: BaseCommand) -> None:
    """
    Register a command in the global registry.

    Args:
        command: Command to register
    """
    registry = get_registry()
    registry.register(command)
