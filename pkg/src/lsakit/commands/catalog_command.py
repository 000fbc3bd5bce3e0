"""CatalogCommand: list catalog entries or build and emit one."""

from typing import Any

from ..algebra import algebra_to_dict, save_algebra
from ..classification import catalog, list_catalog
from ..contracts import BaseCommand, CommandOutput
from ..tracing import get_tracer
from .inputs import field_from_arguments, parse_params


class CatalogCommand(BaseCommand):
    """
    Catalog access.

    Without a name, lists the entries. With a name, builds the algebra from
    ``param`` values (entry defaults otherwise) and writes it to ``emit``.
    """

    def __init__(self):
        self.tracer = get_tracer()

    @property
    def name(self) -> str:
        return "catalog"

    @property
    def description(self) -> str:
        return "List catalog algebras or write one to a file"

    async def execute(self, arguments: dict[str, Any]) -> CommandOutput:
        name = arguments.get("name")
        if not name:
            entries = list_catalog()
            lines = []
            for entry in entries:
                params = f"({', '.join(entry.parameters)})" if entry.parameters else ""
                lines.append(f"{entry.name}{params}: {entry.description}")
            report = {
                "entries": [
                    {
                        "name": e.name,
                        "parameters": list(e.parameters),
                        "description": e.description,
                        "defaults": {k: str(v) for k, v in e.defaults.items()},
                    }
                    for e in entries
                ]
            }
            return CommandOutput(holds=True, report=report, text="\n".join(lines))

        A = catalog(name, parse_params(arguments.get("param")), field_from_arguments(arguments))
        data = algebra_to_dict(A)
        lines = [f"algebra: {A.name} (dim {A.dim})", f"basis: {', '.join(A.basis)}"]
        for product in data["products"]:
            terms = " + ".join(f"({t['value']}) {t['basis']}" for t in product["result"])
            lines.append(f"  {product['left']} {product['right']} = {terms}")
        if arguments.get("emit"):
            save_algebra(A, arguments["emit"])
            lines.append(f"written to {arguments['emit']}")
            self.tracer.debug(f"Emitted {A.name} to {arguments['emit']}")
        return CommandOutput(holds=True, report=data, text="\n".join(lines))
