"""CheckCommand: identities and completeness of an algebra."""

from typing import Any

from ..completeness import identity_report, is_complete
from ..contracts import BaseCommand, CommandOutput
from ..tracing import get_tracer
from .inputs import field_from_arguments, parse_params, resolve_algebra


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


class CheckCommand(BaseCommand):
    """
    Identity and completeness report.

    Left symmetry, its two operator forms and Jacobi are always checked;
    completeness only when the algebra is left-symmetric.
    """

    def __init__(self):
        self.tracer = get_tracer()

    @property
    def name(self) -> str:
        return "check"

    @property
    def description(self) -> str:
        return "Check left-symmetry identities and completeness"

    async def execute(self, arguments: dict[str, Any]) -> CommandOutput:
        field = field_from_arguments(arguments)
        A = resolve_algebra(arguments["source"], field, parse_params(arguments.get("param")))
        identities = identity_report(A)
        completeness = is_complete(A) if identities.left_symmetric() else None

        lines = [f"algebra: {A.name} (dim {A.dim})"]
        lines.append(f"left-symmetric: {_yes(identities.left_symmetric())}")
        for check in identities.checks:
            line = f"  {check.name}: {_yes(check.holds)}"
            if check.witness:
                line += f" (witness {', '.join(check.witness)})"
            lines.append(line)
        if completeness is None:
            lines.append("complete: not checked")
        else:
            line = f"complete: {_yes(completeness.verdict)}"
            if completeness.witness_label:
                line += f" (witness {completeness.witness_label})"
            lines.append(line)
        lines.extend(f"note: {n}" for n in identities.notes)

        report: dict[str, Any] = {"identities": identities.model_dump(mode="json")}
        if completeness is not None:
            report["completeness"] = completeness.model_dump(mode="json")
        holds = identities.all_hold() and completeness is not None and completeness.verdict
        return CommandOutput(holds=holds, report=report, text="\n".join(lines))
