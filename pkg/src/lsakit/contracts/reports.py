"""Machine-readable reports emitted by analyses.

Exact scalars are always carried as strings so JSON output never drifts.
"""

from enum import Enum
from typing import Literal

from pydantic import BaseModel, Field


class CheckModel(BaseModel):
    """One identity verified on basis tuples."""

    name: str = Field(description="Identity name")
    holds: bool = Field(description="Whether the identity holds")
    witness: list[str] | None = Field(default=None, description="Violating basis labels")
    values: list[list[str]] | None = Field(default=None, description="Values at the witness")


class IdentityReport(BaseModel):
    """Identities of a structure-constant table."""

    algebra: str = Field(description="Algebra name")
    dim: int = Field(description="Dimension")
    checks: list[CheckModel] = Field(default_factory=list, description="Identity results")
    notes: list[str] = Field(default_factory=list, description="Provenance remarks")

    def get(self, name: str) -> CheckModel | None:
        return next((c for c in self.checks if c.name == name), None)

    def left_symmetric(self) -> bool:
        check = self.get("left-symmetry")
        return bool(check and check.holds)

    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)


class Criterion(str, Enum):
    """Completeness criteria."""

    NILPOTENT = "a"
    DET_ONE = "b"
    NONVANISHING = "c"
    TRACE = "d"


class CriterionResult(BaseModel):
    criterion: Criterion = Field(description="Criterion letter")
    description: str = Field(description="What was verified")
    holds: bool = Field(description="Whether the criterion holds")
    conclusive: bool = Field(
        default=True, description="False when only sample evidence was gathered"
    )
    witness: list[str] | None = Field(default=None, description="Witness vector on failure")
    detail: str | None = Field(default=None, description="Extra information")

    model_config = {"use_enum_values": True}


class CompletenessReport(BaseModel):
    """Completeness verdict with per-criterion evidence."""

    algebra: str = Field(description="Algebra name")
    verdict: bool = Field(description="Completeness decided by the trace criterion")
    criteria: list[CriterionResult] = Field(default_factory=list, description="Criterion results")
    witness: list[str] | None = Field(default=None, description="Witness vector on failure")
    witness_label: str | None = Field(default=None, description="Basis label of the witness")

    def get(self, criterion: Criterion | str) -> CriterionResult | None:
        key = Criterion(criterion).value
        return next((c for c in self.criteria if c.criterion == key), None)

    def consistent(self) -> bool:
        """Every conclusive criterion agrees with the verdict; sample evidence never contradicts it."""
        for c in self.criteria:
            if c.conclusive and c.holds != self.verdict:
                return False
            if not c.conclusive and self.verdict and not c.holds:
                return False
        return True


class CorollaryReport(BaseModel):
    """Completeness of subalgebras and quotients of a complete algebra."""

    algebra: str = Field(description="Algebra name")
    holds: bool = Field(description="Every derived algebra is complete")
    checks: list[CheckModel] = Field(default_factory=list, description="One entry per derived algebra")
    polynomial_degree: int = Field(description="Total degree of det(I + R(x))")


class PartModel(BaseModel):
    root: list[str] = Field(description="Root values on the Cartan basis")
    basis: list[list[str]] = Field(description="Echelon basis of the part")


class DecompositionModel(BaseModel):
    rep: Literal["ad", "L"] = Field(description="Representation")
    cartan: list[list[str]] = Field(description="Cartan basis vectors")
    parts: list[PartModel] = Field(description="Root parts")


class CanonicalReport(BaseModel):
    """Canonical decomposition and the transport that produced it."""

    algebra: str = Field(description="Algebra name")
    initial_cartan: list[list[str]] = Field(description="Starting Cartan subalgebra")
    cartan: list[list[str]] = Field(description="Canonical Cartan subalgebra")
    word: list[list[str]] = Field(default_factory=list, description="Transport word factors")
    point: list[str] = Field(default_factory=list, description="Point of 1+g moved to the unit")
    single_factor: bool = Field(default=True, description="Word has at most one factor")
    rounds: int = Field(default=0, description="Refinement rounds")
    decomposition: DecompositionModel = Field(description="Canonical root decomposition")
    canonical: bool = Field(description="ad and L decompositions coincide")
    semisimple_parts_agree: bool = Field(description="Semisimple parts of L and ad agree")
    derivations: bool = Field(description="Semisimple parts of L are derivations")
    graded: bool = Field(description="Parts multiply according to root addition")


class PropertyResult(BaseModel):
    name: str = Field(description="Property tag such as l1 or s2")
    holds: bool = Field(description="Whether the property holds")
    witness: list[str] | None = Field(default=None, description="Offending vertex, edge or path")
    note: str | None = Field(default=None, description="Recorded remark")


class PropertyReport(BaseModel):
    kind: str = Field(description="left, right or simple")
    results: list[PropertyResult] = Field(default_factory=list)

    def get(self, name: str) -> PropertyResult | None:
        return next((r for r in self.results if r.name == name), None)

    def failed(self) -> list[str]:
        return [r.name for r in self.results if not r.holds]

    def all_hold(self) -> bool:
        return not self.failed()


class GraphModel(BaseModel):
    kind: Literal["left", "right"] = Field(description="Graph kind")
    vertices: list[str] = Field(description="Root values")
    edges: list[list[str]] = Field(description="Directed edges as [source, target]")
    coefficients: dict[str, str] = Field(
        default_factory=dict, description="Structure constant carried by each edge"
    )


class SimplicityReport(BaseModel):
    algebra: str = Field(description="Algebra name")
    simple: bool = Field(description="Whether no proper ideal was found")
    level: Literal["exact", "verified-generators"] = Field(description="Verification level")
    witness: list[list[str]] | None = Field(default=None, description="Basis of a proper ideal")
    generators_tested: int = Field(default=0, description="Number of generators closed")


class FamilyModel(BaseModel):
    """One family of simple complete algebras found by classification."""

    name: str = Field(description="Family name")
    dim: int = Field(description="Dimension")
    vertices: list[str] = Field(description="Root values")
    edges: list[list[str]] = Field(description="Left graph edges without loops")
    parameters: list[str] = Field(default_factory=list, description="Free parameters")
    constraints: list[str] = Field(default_factory=list, description="Constraints on parameters")
    excluded: list[str] = Field(default_factory=list, description="Excluded parameter values")
    products: list[str] = Field(default_factory=list, description="Structure constants")
    verification: dict[str, bool] = Field(default_factory=dict, description="Checks on a representative")
    catalog: str | None = Field(default=None, description="Matching catalog entry")
    points: list[str] = Field(default_factory=list, description="Distinguished points")
    members: list[str] = Field(default_factory=list, description="Solved subfamilies merged into this one")


class ClassificationReport(BaseModel):
    dim: int = Field(description="Requested dimension")
    complete_list: bool = Field(description="Whether the list is claimed complete")
    banner: str | None = Field(default=None, description="Scope remark")
    candidates: int = Field(description="Graph candidates enumerated")
    graphs: list[str] = Field(default_factory=list, description="Candidate left graphs")
    families: list[FamilyModel] = Field(default_factory=list)
    unsolved: list[str] = Field(default_factory=list, description="Branches left unsolved")
    rejected: list[str] = Field(default_factory=list, description="Solutions failing verification")
