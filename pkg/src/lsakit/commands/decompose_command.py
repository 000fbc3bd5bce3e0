"""DecomposeCommand: canonical Cartan subalgebra and root decomposition."""

from typing import Any

from ..contracts import BaseCommand, CommandOutput
from ..decomposition import canonical_report, make_canonical
from ..tracing import get_tracer
from .inputs import field_from_arguments, parse_params, parse_seed, resolve_algebra


class DecomposeCommand(BaseCommand):
    """Canonical decomposition; ``verbose`` adds the transport word, one factor per line."""

    def __init__(self):
        self.tracer = get_tracer()

    @property
    def name(self) -> str:
        return "decompose"

    @property
    def description(self) -> str:
        return "Compute the canonical root decomposition"

    async def execute(self, arguments: dict[str, Any]) -> CommandOutput:
        field = field_from_arguments(arguments)
        A = resolve_algebra(arguments["source"], field, parse_params(arguments.get("param")))
        seed = parse_seed(arguments.get("seed"), field, A.dim)
        form = make_canonical(A, seed=seed)
        report = canonical_report(form)

        lines = [f"algebra: {A.name} (dim {A.dim})"]
        lines.append("cartan: " + "; ".join(f"({', '.join(v)})" for v in report.cartan))
        for part in report.decomposition.parts:
            basis = "; ".join(f"({', '.join(v)})" for v in part.basis)
            lines.append(f"  root ({', '.join(part.root)}): {basis}")
        if arguments.get("verbose"):
            lines.append("initial cartan: " + "; ".join(f"({', '.join(v)})" for v in report.initial_cartan))
            for i, factor in enumerate(report.word, start=1):
                lines.append(f"  transport {i}: exp({', '.join(factor)})")
            lines.append(f"  point: ({', '.join(report.point)})")
        lines.append(f"rounds: {report.rounds}")
        lines.append(f"semisimple parts of L and ad agree: {'yes' if report.semisimple_parts_agree else 'no'}")
        lines.append(f"derivations: {'yes' if report.derivations else 'no'}")
        lines.append(f"graded: {'yes' if report.graded else 'no'}")

        holds = report.canonical and report.semisimple_parts_agree and report.derivations and report.graded
        return CommandOutput(holds=holds, report=report.model_dump(mode="json"), text="\n".join(lines))
