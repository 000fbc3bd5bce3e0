"""ClassifyCommand: classification report for one dimension."""

import re
from pathlib import Path
from typing import Any

import sympy

from ..classification import classify_async
from ..contracts import BaseCommand, CommandOutput, FamilyModel
from ..errors import BadParameters
from ..graphs import RootGraph, as_vertex, to_dot
from ..tracing import get_tracer


def family_graph(family: FamilyModel) -> RootGraph:
    """Left graph of a family, loops included."""
    vertices = [as_vertex(sympy.sympify(v)) for v in family.vertices]
    edges = [(as_vertex(sympy.sympify(a)), as_vertex(sympy.sympify(b))) for a, b in family.edges]
    edges += [(v, v) for v in vertices if v != 0]
    return RootGraph.create("left", vertices, edges)


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", name).strip("_")


class ClassifyCommand(BaseCommand):
    """Runs the classification; ``out`` receives one DOT file per family."""

    def __init__(self):
        self.tracer = get_tracer()

    @property
    def name(self) -> str:
        return "classify"

    @property
    def description(self) -> str:
        return "Classify simple complete algebras of a given dimension"

    def validate_arguments(self, arguments: dict[str, Any]) -> dict[str, Any]:
        if arguments.get("dim") is None:
            raise BadParameters("classify needs --dim")
        return arguments

    async def execute(self, arguments: dict[str, Any]) -> CommandOutput:
        report = await classify_async(int(arguments["dim"]))

        if arguments.get("out"):
            out = Path(arguments["out"])
            out.mkdir(parents=True, exist_ok=True)
            for i, family in enumerate(report.families, start=1):
                path = out / f"{i:02d}_{_slug(family.name)}.dot"
                path.write_text(to_dot(family_graph(family), family.name), encoding="utf-8")
            self.tracer.debug(f"Wrote {len(report.families)} DOT files to {out}")

        lines = [f"dimension {report.dim}: {report.candidates} candidate graphs"]
        if report.banner:
            lines.append(f"note: {report.banner}")
        for graph in report.graphs:
            lines.append(f"  graph {graph}")
        for family in report.families:
            params = f" [{', '.join(family.parameters)}]" if family.parameters else ""
            lines.append(f"family {family.name}{params}")
            lines.append("  edges: " + ", ".join(f"{a}->{b}" for a, b in family.edges))
            lines.extend(f"  {p}" for p in family.products)
            lines.extend(f"  constraint: {c}" for c in family.constraints)
            if family.excluded:
                lines.append(f"  excluded: {', '.join(family.excluded)}")
            lines.extend(f"  point {p}" for p in family.points)
            lines.extend(f"  member {m}" for m in family.members)
            failed = [k for k, v in family.verification.items() if not v]
            lines.append(f"  verified: {'yes' if not failed else 'no (' + ', '.join(failed) + ')'}")
        lines.extend(f"unsolved: {u}" for u in report.unsolved)
        lines.extend(f"rejected: {r}" for r in report.rejected)
        if not report.families and not report.banner:
            lines.append("no simple complete algebras")

        verified = all(all(f.verification.values()) for f in report.families)
        return CommandOutput(
            holds=verified,
            incomplete=bool(report.unsolved),
            report=report.model_dump(mode="json"),
            text="\n".join(lines),
        )
