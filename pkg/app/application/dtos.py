"""Data transfer objects for the application layer."""

from dataclasses import dataclass, field

from app.domain.enums import CheckStatus, LicciVerdict, Suite, Variant
from app.domain.models.catalog import CatalogEntry, LinkEntry
from app.domain.models.complex import BettiTable
from app.domain.models.crystal import CrystalGraph
from app.domain.models.hilbert_data import HilbertData
from app.domain.models.polynomial import Polynomial
from app.domain.models.reports import AppendixReport, CheckResult, LinkReport
from app.domain.value_objects.run_config import RunConfig


@dataclass(frozen=True)
class EntryView:
    """A catalog entry with its generators built over the run's field.

    Attributes:
        entry: The catalog entry.
        generators: Generators in canonical form; empty for cubic-free entries.
        config: Configuration of the run.
    """

    entry: CatalogEntry
    generators: tuple[Polynomial, ...]
    config: RunConfig


@dataclass(frozen=True)
class IdealResult:
    """Fields shared by every ``ideal`` subcommand result.

    Attributes:
        key: Catalog key.
        variant: Generator text used.
        config: Configuration of the run.
        checks: Comparisons with the printed data.
    """

    key: str
    variant: Variant
    config: RunConfig
    checks: tuple[CheckResult, ...] = ()

    @property
    def table_match(self) -> bool:
        return all(c.status is CheckStatus.PASS for c in self.checks)


@dataclass(frozen=True)
class GroebnerResult(IdealResult):
    """Reduced Gröbner basis of a catalog ideal."""

    basis: tuple[Polynomial, ...] = ()


@dataclass(frozen=True)
class HilbertResult(IdealResult):
    """Hilbert series of R/I, with the Hilbert function up to ``prefix`` when asked."""

    data: HilbertData | None = None
    prefix: tuple[int, ...] = ()


@dataclass(frozen=True)
class GorensteinResult(IdealResult):
    """Palindromicity of the h-vector, with the printed flags it is compared to."""

    palindromic: bool = False
    h_vector: str = ""
    printed: bool | None = None
    appendix: bool | None = None


@dataclass(frozen=True)
class BettiResult(IdealResult):
    betti: BettiTable = field(default_factory=BettiTable)


@dataclass(frozen=True)
class LicciResult(IdealResult):
    """Licci verdict for the entry, or for its core ideal when the entry asks for that.

    Attributes:
        target: Name of the ideal the criterion ran on.
        codim: Its codimension.
        betti: Its Betti table.
        verdict: NOT_LICCI or INCONCLUSIVE.
    """

    target: str = ""
    codim: int = 0
    betti: BettiTable = field(default_factory=BettiTable)
    verdict: LicciVerdict = LicciVerdict.INCONCLUSIVE


@dataclass(frozen=True)
class LinkResult:
    """A linkage check, with the catalog claim it came from when there is one.

    Attributes:
        report: Domain report.
        config: Configuration of the run.
        claim: Catalog linkage claim, if the sequence came from the catalog.
        variant: Sequence text used for a catalog claim.
    """

    report: LinkReport
    config: RunConfig
    claim: LinkEntry | None = None
    variant: Variant = Variant.EMENDED


@dataclass(frozen=True)
class GraphResult:
    """A crystal graph with its structural properties and optional table comparison."""

    graph: CrystalGraph
    graded: bool
    unique_extremes: bool
    self_dual: bool
    appendix: AppendixReport | None = None
    ledger: dict[tuple[int, str], str] = field(default_factory=dict, hash=False)


@dataclass(frozen=True)
class EntryReport:
    """All checks of one suite item and how long they took.

    Attributes:
        key: Entry, link, identity or graph key.
        checks: Results in the order they ran.
        seconds: Wall time of the item.
    """

    key: str
    checks: tuple[CheckResult, ...]
    seconds: float

    @property
    def failed(self) -> bool:
        return any(c.status is CheckStatus.FAIL for c in self.checks)


@dataclass(frozen=True)
class SuiteReport:
    """Outcome of a verification suite, items ordered by key.

    Attributes:
        suite: Suite that ran.
        config: Configuration of the run.
        items: One report per entry, link, identity set and graph.
        seconds: Total wall time.
    """

    suite: Suite
    config: RunConfig
    items: tuple[EntryReport, ...]
    seconds: float

    @property
    def failed_keys(self) -> list[str]:
        return [item.key for item in self.items if item.failed]

    def count(self, status: CheckStatus) -> int:
        return sum(1 for item in self.items for c in item.checks if c.status is status)
