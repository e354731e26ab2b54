"""Pydantic report schemas for the command-line layer."""

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1


def to_camel(s: str) -> str:
    """Convert a snake_case string to camelCase."""
    parts = s.split("_")
    return parts[0] + "".join(w.capitalize() for w in parts[1:])


class CamelModel(BaseModel):
    """Base model with automatic camelCase alias generation."""

    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True)


# --- Common ---


class ConfigResponse(CamelModel):
    """Configuration echoed in every report."""

    field: str
    prime: int
    seed: int
    max_steps: int
    rank_points: int


class CheckResponse(CamelModel):
    key: str
    check: str
    status: str
    expected: str = ""
    computed: str = ""
    note: str = ""


class Report(CamelModel):
    """Envelope shared by every report."""

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    command: str
    config: ConfigResponse | None = None


class ErrorBody(CamelModel):
    code: str
    message: str
    keys: list[str] = []


class ErrorResponse(CamelModel):
    """Machine-readable error written to stderr."""

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    error: ErrorBody


# --- Catalog ---


class CatalogItemResponse(CamelModel):
    """One row of the catalog listing."""

    key: str
    ring: str
    node: int | None = None
    codim: int | None = None
    dim: int | None = None
    h: str | None = None
    gorenstein: bool | None = None
    description: str = ""
    core_suite: bool = False


class CatalogListResponse(Report):
    count: int
    entries: list[CatalogItemResponse]


class EntryResponse(Report):
    """A catalog entry with its generators in canonical form."""

    key: str
    ring: str
    variant: str
    source: str
    node: int | None = None
    generators: list[str]
    matrices: dict[str, str] = {}
    recipe: str = ""
    core: list[str] = []
    expect: CatalogItemResponse
    twists: str | None = None
    totals: list[int] | None = None
    ledger: dict[str, str] = {}


# --- Ideals ---


class IdealReport(Report):
    key: str
    variant: str
    table_match: bool
    checks: list[CheckResponse] = []


class GroebnerResponse(IdealReport):
    size: int
    basis: list[str]


class HilbertResponse(IdealReport):
    """Hilbert series of R/I: ``k_numerator / (1-T)^n = h / (1-T)^dim``."""

    codim: int
    dim: int
    h: str
    k_numerator: str
    degree: int
    hilbert_function: list[int] = []


class GorensteinResponse(IdealReport):
    palindromic: bool
    h: str
    printed: bool | None = None
    appendix: bool | None = None


class BettiResponse(IdealReport):
    """Betti table as ``{i: {j: beta}}`` plus totals and twists text."""

    betti: dict[str, dict[str, int] | list[int]]
    totals: list[int]
    twists: str


class LicciResponse(IdealReport):
    target: str
    codim: int
    verdict: str
    max_last_twist: int
    min_first_twist: int
    betti: dict[str, dict[str, int] | list[int]]


# --- Linkage ---


class LinkResponse(Report):
    first: str
    second: str
    sequence: list[str]
    regular_sequence: bool
    colon_forward: bool
    colon_backward: bool
    linked: bool
    claim: str | None = None
    variant: str
    ledger: dict[str, str] = {}


# --- Graphs ---


class VertexResponse(CamelModel):
    index: int
    weight: list[int]
    word: str
    length: int


class EdgeResponse(CamelModel):
    source: int = Field(alias="from")
    target: int = Field(alias="to")
    label: int


class MismatchResponse(CamelModel):
    node: int
    column: str
    expected: str
    computed: str
    ledger: str = ""


class AppendixResponse(CamelModel):
    """Comparison of the graph with its printed weight table."""

    rows: int
    matched: int
    passed: bool
    mismatches: list[MismatchResponse]
    weights_skipped: list[int]
    node_map: dict[str, int]


class GraphResponse(Report):
    label: str
    vertex_count: int
    vertices: list[VertexResponse]
    edges: list[EdgeResponse]
    graded: bool
    unique_extremes: bool
    self_dual: bool
    appendix: AppendixResponse | None = None


# --- Verification ---


class SuiteItemResponse(CamelModel):
    key: str
    seconds: float
    failed: bool
    checks: list[CheckResponse]


class SuiteResponse(Report):
    """Outcome of a verification suite; ``failed`` lists unexplained mismatches."""

    suite: str
    passed: int
    ledger: int
    failures: int
    skipped: int
    failed: list[str]
    seconds: float
    items: list[SuiteItemResponse]
