"""Command verbs and their registry."""

from .catalog_command import CatalogCommand
from .check_command import CheckCommand
from .classify_command import ClassifyCommand, family_graph
from .decompose_command import DecomposeCommand
from .graph_command import GraphCommand
from .inputs import field_from_arguments, parse_params, parse_seed, resolve_algebra
from .registry import CommandRegistry, get_registry, register_command
from .simple_command import SimpleCommand

DEFAULT_COMMANDS = (
    CheckCommand,
    DecomposeCommand,
    GraphCommand,
    SimpleCommand,
    ClassifyCommand,
    CatalogCommand,
)


def register_default_commands(registry: CommandRegistry | None = None) -> CommandRegistry:
    """Register every verb not yet present and return the registry."""
    registry = registry or get_registry()
    for command_type in DEFAULT_COMMANDS:
        command = command_type()
        if registry.get(command.name) is None:
            registry.register(command)
    return registry


__all__ = [
    "CatalogCommand",
    "CheckCommand",
    "ClassifyCommand",
    "CommandRegistry",
    "DEFAULT_COMMANDS",
    "DecomposeCommand",
    "GraphCommand",
    "SimpleCommand",
    "family_graph",
    "field_from_arguments",
    "get_registry",
    "parse_params",
    "parse_seed",
    "register_command",
    "register_default_commands",
    "resolve_algebra",
]
