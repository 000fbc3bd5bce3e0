"""GraphCommand: left or right root graph with its property report."""

from pathlib import Path
from typing import Any

from ..contracts import BaseCommand, CommandOutput
from ..decomposition import make_canonical
from ..errors import BadParameters
from ..graphs import check_properties, check_simple_properties, graph_from_structure, graph_model, to_dot
from ..tracing import get_tracer
from .inputs import field_from_arguments, parse_params, parse_seed, resolve_algebra


class GraphCommand(BaseCommand):
    """Root graph from the canonical decomposition, its l/r properties and s1-s3."""

    def __init__(self):
        self.tracer = get_tracer()

    @property
    def name(self) -> str:
        return "graph"

    @property
    def description(self) -> str:
        return "Build a root graph and check its properties"

    def validate_arguments(self, arguments: dict[str, Any]) -> dict[str, Any]:
        kind = arguments.get("kind") or "l"
        if kind not in ("l", "r"):
            raise BadParameters(f"--kind must be l or r, got {kind!r}")
        return arguments | {"kind": kind}

    async def execute(self, arguments: dict[str, Any]) -> CommandOutput:
        field = field_from_arguments(arguments)
        A = resolve_algebra(arguments["source"], field, parse_params(arguments.get("param")))
        seed = parse_seed(arguments.get("seed"), field, A.dim)
        form = make_canonical(A, seed=seed)
        left, right = graph_from_structure(A, form.decomposition)
        G = left if arguments["kind"] == "l" else right
        properties = check_properties(G)
        simple_properties = check_simple_properties(left, right, A)

        if arguments.get("dot"):
            Path(arguments["dot"]).write_text(to_dot(G, f"{A.name} {G.kind}"), encoding="utf-8")
            self.tracer.debug(f"Wrote {arguments['dot']}")

        model = graph_model(G)
        lines = [f"algebra: {A.name} ({G.kind} graph)"]
        lines.append(f"vertices: {', '.join(model.vertices)}")
        lines.append("edges: " + ", ".join(f"{a}->{b}" for a, b in model.edges))
        for report in (properties, simple_properties):
            for result in report.results:
                line = f"  {result.name}: {'holds' if result.holds else 'fails'}"
                if result.witness:
                    line += f" (witness {', '.join(result.witness)})"
                if result.note:
                    line += f" [{result.note}]"
                lines.append(line)

        return CommandOutput(
            holds=properties.all_hold(),
            report={
                "graph": model.model_dump(mode="json"),
                "properties": properties.model_dump(mode="json"),
                "simple_properties": simple_properties.model_dump(mode="json"),
            },
            text="\n".join(lines),
        )
