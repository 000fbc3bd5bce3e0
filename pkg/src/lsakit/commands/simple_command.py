"""SimpleCommand: simplicity verdict."""

from typing import Any

from ..contracts import BaseCommand, CommandOutput
from ..ideals import is_simple
from .inputs import field_from_arguments, parse_params, resolve_algebra


class SimpleCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "simple"

    @property
    def description(self) -> str:
        return "Decide whether the algebra has a proper nonzero ideal"

    async def execute(self, arguments: dict[str, Any]) -> CommandOutput:
        field = field_from_arguments(arguments)
        A = resolve_algebra(arguments["source"], field, parse_params(arguments.get("param")))
        report = is_simple(A)
        lines = [
            f"algebra: {A.name} (dim {A.dim})",
            f"simple: {'yes' if report.simple else 'no'} ({report.level})",
        ]
        if report.witness:
            lines.append("proper ideal: " + "; ".join(f"({', '.join(v)})" for v in report.witness))
        return CommandOutput(holds=report.simple, report=report.model_dump(mode="json"), text="\n".join(lines))
