"""Unit tests for use cases with in-memory fakes (no files, no CLI)."""

import pytest

from app.application.interfaces.catalog_repository import CatalogRepository
from app.application.interfaces.weight_table_repository import WeightTableRepository
from app.application.use_cases.catalog.list_entries import ListEntries
from app.application.use_cases.catalog.show_entry import ShowEntry, ShowEntryInput
from app.application.use_cases.graphs.build_graph import BuildGraph, BuildGraphInput
from app.application.use_cases.ideals.betti_numbers import BettiInput, ComputeBetti
from app.application.use_cases.ideals.gorenstein import CheckGorenstein
from app.application.use_cases.ideals.groebner_basis import ComputeGroebnerBasis
from app.application.use_cases.ideals.hilbert_series import ComputeHilbertSeries, HilbertInput
from app.application.use_cases.ideals.licci import CheckLicci
from app.application.use_cases.ideals.load_ideal import IdealInput
from app.application.use_cases.linkage.check_link import CheckLink, CheckLinkInput
from app.application.use_cases.verify.run_suite import (
    RunSuite,
    RunSuiteInput,
    natural_key,
    plan_jobs,
)
from app.domain.enums import CheckStatus, FieldKind, LicciVerdict, Suite
from app.domain.errors import NotFoundError, ValidationError
from app.domain.models.catalog import Catalog
from app.domain.models.crystal import WeightTable
from app.domain.value_objects.run_config import RunConfig
from app.infrastructure.catalog.parser import parse_catalog

# --- Fakes ---


class FakeCatalogRepository(CatalogRepository):
    """In-memory catalog repository for testing."""

    def __init__(self, catalog: Catalog) -> None:
        self._catalog = catalog

    async def load(self) -> Catalog:
        return self._catalog


class FakeWeightTableRepository(WeightTableRepository):
    """In-memory weight-table repository for testing."""

    def __init__(self, tables: list[WeightTable] | None = None) -> None:
        self._tables = list(tables or [])

    async def find_all(self) -> list[WeightTable]:
        return list(self._tables)

    async def find_by_label(self, label: str) -> WeightTable | None:
        return next((t for t in self._tables if t.label == label), None)


@pytest.fixture
def catalog_repo(catalog: Catalog) -> FakeCatalogRepository:
    return FakeCatalogRepository(catalog)


@pytest.fixture
def table_repo(weight_tables: list[WeightTable]) -> FakeWeightTableRepository:
    return FakeWeightTableRepository(weight_tables)


# --- Catalog Tests ---


class TestListEntries:
    """Tests for the ListEntries use case."""

    @pytest.mark.asyncio
    async def test_all_families(self, catalog_repo: FakeCatalogRepository) -> None:
        """Every ideal entry is listed, E6 first."""
        entries = await ListEntries(catalog_repo).execute()
        assert len(entries) == 82
        assert entries[0].family == "E6"
        assert entries[-1].family == "E7"

    @pytest.mark.asyncio
    async def test_one_family(self, catalog_repo: FakeCatalogRepository) -> None:
        """Filtering by family keeps only that family."""
        entries = await ListEntries(catalog_repo).execute(family="E7")
        assert len(entries) == 55
        assert {e.family for e in entries} == {"E7"}


class TestShowEntry:
    """Tests for the ShowEntry use case."""

    @pytest.mark.asyncio
    async def test_ideal_entry(self, catalog_repo: FakeCatalogRepository) -> None:
        """An ideal entry shows its built generators."""
        view = await ShowEntry(catalog_repo).execute(ShowEntryInput(key="E7/J54"))
        assert len(view.generators) == 2
        assert view.config == RunConfig()

    @pytest.mark.asyncio
    async def test_derivative_list(self, catalog_repo: FakeCatalogRepository) -> None:
        """A derivative block shows all 27 derivatives in index order."""
        view = await ShowEntry(catalog_repo).execute(ShowEntryInput(key="derivatives/E7"))
        assert len(view.generators) == 27

    @pytest.mark.asyncio
    async def test_unknown_key(self, catalog_repo: FakeCatalogRepository) -> None:
        """An unknown key raises NotFoundError."""
        with pytest.raises(NotFoundError, match="Unknown catalog key"):
            await ShowEntry(catalog_repo).execute(ShowEntryInput(key="E8/K1"))


# --- Ideal Tests ---


class TestIdealUseCases:
    """Tests for the ideal computations."""

    @pytest.mark.asyncio
    async def test_groebner_basis_of_a_hypersurface(
        self, catalog_repo: FakeCatalogRepository
    ) -> None:
        """A principal ideal is its own basis."""
        result = await ComputeGroebnerBasis(catalog_repo).execute(IdealInput(key="E6/I26"))
        assert len(result.basis) == 1

    @pytest.mark.asyncio
    async def test_non_ideal_key(self, catalog_repo: FakeCatalogRepository) -> None:
        """A cubic block is not an ideal entry."""
        with pytest.raises(ValidationError, match="not an ideal entry"):
            await ComputeGroebnerBasis(catalog_repo).execute(IdealInput(key="cubic/E7"))

    @pytest.mark.asyncio
    async def test_hilbert_series_with_prefix(
        self, catalog_repo: FakeCatalogRepository, table_repo: FakeWeightTableRepository
    ) -> None:
        """The Hilbert series matches the printed data and the prefix starts at 1."""
        uc = ComputeHilbertSeries(catalog_repo, table_repo)
        result = await uc.execute(HilbertInput(key="E6/I23", prefix=3))
        assert result.data is not None
        assert result.data.codim == 4
        assert len(result.prefix) == 4
        assert result.prefix[0] == 1
        assert result.table_match

    @pytest.mark.asyncio
    async def test_negative_prefix(
        self, catalog_repo: FakeCatalogRepository, table_repo: FakeWeightTableRepository
    ) -> None:
        """A negative prefix degree raises ValidationError."""
        uc = ComputeHilbertSeries(catalog_repo, table_repo)
        with pytest.raises(ValidationError, match="negative"):
            await uc.execute(HilbertInput(key="E6/I23", prefix=-1))

    @pytest.mark.asyncio
    async def test_hilbert_series_over_the_rationals(
        self, catalog_repo: FakeCatalogRepository, table_repo: FakeWeightTableRepository
    ) -> None:
        """The rational field gives the same h-vector."""
        uc = ComputeHilbertSeries(catalog_repo, table_repo)
        config = RunConfig(field=FieldKind.QQ)
        result = await uc.execute(HilbertInput(key="E6/I24", config=config))
        assert result.data is not None
        assert str(result.data.h_vector) == "1+3T+3T^2+T^3"

    @pytest.mark.asyncio
    async def test_almost_complete_intersection_is_not_gorenstein(
        self, catalog_repo: FakeCatalogRepository, table_repo: FakeWeightTableRepository
    ) -> None:
        """The h-vector of E6/I22 is not palindromic."""
        result = await CheckGorenstein(catalog_repo, table_repo).execute(IdealInput(key="E6/I22"))
        assert result.palindromic is False
        assert result.h_vector == "1+4T+5T^2+T^3"

    @pytest.mark.asyncio
    async def test_gorenstein_complete_intersection(
        self, catalog_repo: FakeCatalogRepository, table_repo: FakeWeightTableRepository
    ) -> None:
        """E6/I25 is Gorenstein and agrees with both printed flags."""
        result = await CheckGorenstein(catalog_repo, table_repo).execute(IdealInput(key="E6/I25"))
        assert result.palindromic
        assert result.printed is True
        assert result.appendix is True
        assert result.table_match

    @pytest.mark.asyncio
    async def test_betti_from_recipe(self, catalog_repo: FakeCatalogRepository) -> None:
        """The recipe of E6/I23 is a Pfaffian complex tensored with one linear form."""
        result = await ComputeBetti(catalog_repo).execute(
            BettiInput(key="E6/I23", from_recipe=True)
        )
        assert result.betti.totals == (1, 6, 10, 6, 1)

    @pytest.mark.asyncio
    async def test_betti_without_recipe(self, catalog_repo: FakeCatalogRepository) -> None:
        """Asking for a missing recipe raises NotFoundError."""
        with pytest.raises(NotFoundError, match="no structural recipe"):
            await ComputeBetti(catalog_repo).execute(BettiInput(key="E7/J50", from_recipe=True))

    @pytest.mark.asyncio
    async def test_licci_is_inconclusive_for_complete_intersections(
        self, catalog_repo: FakeCatalogRepository
    ) -> None:
        """The criterion cannot rule out a complete intersection."""
        result = await CheckLicci(catalog_repo).execute(IdealInput(key="E6/I25"))
        assert result.verdict is LicciVerdict.INCONCLUSIVE
        assert result.codim == 2
        assert result.target == "E6/I25"


# --- Linkage and Graph Tests ---


class TestCheckLink:
    """Tests for the CheckLink use case."""

    @pytest.mark.asyncio
    async def test_stored_sequence(self, catalog_repo: FakeCatalogRepository) -> None:
        """The stored E6 sequence links the two entries."""
        result = await CheckLink(catalog_repo).execute(
            CheckLinkInput(first="E6/I22", second="E6/I23")
        )
        assert result.report.linked
        assert result.claim is not None
        assert result.claim.key == "link/E6/I22-I23"

    @pytest.mark.asyncio
    async def test_no_stored_sequence(self, catalog_repo: FakeCatalogRepository) -> None:
        """Entries without a stored claim raise NotFoundError."""
        with pytest.raises(NotFoundError, match="No stored linking sequence"):
            await CheckLink(catalog_repo).execute(CheckLinkInput(first="E6/I26", second="E6/I25"))

    @pytest.mark.asyncio
    async def test_empty_sequence(self, catalog_repo: FakeCatalogRepository) -> None:
        """A blank sequence raises ValidationError."""
        with pytest.raises(ValidationError, match="empty"):
            await CheckLink(catalog_repo).execute(
                CheckLinkInput(first="E6/I22", second="E6/I23", sequence="  ")
            )


class TestBuildGraph:
    """Tests for the BuildGraph use case."""

    @pytest.mark.asyncio
    async def test_graph_with_table(self, table_repo: FakeWeightTableRepository) -> None:
        """The E6 graph is built and matches its table."""
        result = await BuildGraph(table_repo).execute(
            BuildGraphInput(type_label="E6", weight="w1", verify=True)
        )
        assert len(result.graph) == 27
        assert result.graded and result.unique_extremes and result.self_dual
        assert result.appendix is not None
        assert result.appendix.passed

    @pytest.mark.asyncio
    async def test_e7_graph_carries_cell_notes(self, table_repo: FakeWeightTableRepository) -> None:
        """Every E7 table mismatch has a ledger note for its own cell."""
        result = await BuildGraph(table_repo).execute(
            BuildGraphInput(type_label="E7", weight="w7", verify=True)
        )
        assert result.appendix is not None
        assert not result.appendix.passed
        for m in result.appendix.mismatches:
            assert result.ledger[(m.node, m.column)]

    @pytest.mark.asyncio
    async def test_missing_table(self) -> None:
        """Verifying without a table raises NotFoundError."""
        uc = BuildGraph(FakeWeightTableRepository())
        with pytest.raises(NotFoundError, match="No printed weight table"):
            await uc.execute(BuildGraphInput(type_label="E6", weight="w6", verify=True))


# --- Suite Tests ---


class TestPlanJobs:
    """Tests for suite planning."""

    def test_core_suite(self, catalog: Catalog, weight_tables: list[WeightTable]) -> None:
        jobs = plan_jobs(catalog, weight_tables, Suite.CORE)
        kinds = [j.kind for j in jobs]
        assert kinds.count("identities") == 2
        assert kinds.count("graph") == 2
        assert kinds.count("link") == 1
        assert "chain" not in kinds
        entry_keys = {j.key for j in jobs if j.kind == "entry"}
        assert "E7/J55" in entry_keys
        assert "E7/J40" not in entry_keys

    def test_full_suite_adds_chains_and_e7_links(
        self, catalog: Catalog, weight_tables: list[WeightTable]
    ) -> None:
        jobs = plan_jobs(catalog, weight_tables, Suite.FULL)
        kinds = [j.kind for j in jobs]
        assert kinds.count("link") == 2
        assert kinds.count("entry") == 82
        assert "chain" in kinds

    def test_natural_key_order(self) -> None:
        keys = ["E6/I10", "E6/I9", "E7/J1", "E6/I27"]
        assert sorted(keys, key=natural_key) == ["E6/I9", "E6/I10", "E6/I27", "E7/J1"]


class TestRunSuite:
    """Tests for the RunSuite use case, in-process."""

    @pytest.mark.asyncio
    async def test_selected_entries_pass(
        self, catalog_repo: FakeCatalogRepository, table_repo: FakeWeightTableRepository
    ) -> None:
        """A restricted run reports the entry, the identities and the graphs."""
        uc = RunSuite(catalog_repo, table_repo)
        report = await uc.execute(RunSuiteInput(workers=1, keys=("E6/I26", "E6/I25")))
        keys = [item.key for item in report.items]
        assert "E6/I25" in keys and "E6/I26" in keys
        assert keys.index("E6/I25") < keys.index("E6/I26")
        assert report.failed_keys == []
        assert report.count(CheckStatus.LEDGER) > 0

    @pytest.mark.asyncio
    async def test_corrupted_catalog_fails(
        self, catalog_text: str, table_repo: FakeWeightTableRepository
    ) -> None:
        """A wrong printed h-vector is caught and named."""
        corrupted = catalog_text.replace(
            "expect.codim = 1\nexpect.h = 1+T\n", "expect.codim = 1\nexpect.h = 1+2T\n", 1
        )
        assert corrupted != catalog_text
        uc = RunSuite(FakeCatalogRepository(parse_catalog(corrupted)), table_repo)
        report = await uc.execute(RunSuiteInput(workers=1, keys=("E6/I26",)))
        assert report.failed_keys == ["E6/I26"]

    @pytest.mark.asyncio
    async def test_unknown_key(
        self, catalog_repo: FakeCatalogRepository, table_repo: FakeWeightTableRepository
    ) -> None:
        """Restricting to an unknown key raises NotFoundError."""
        uc = RunSuite(catalog_repo, table_repo)
        with pytest.raises(NotFoundError):
            await uc.execute(RunSuiteInput(workers=1, keys=("E6/I99",)))

    @pytest.mark.slow
    @pytest.mark.asyncio
    async def test_core_suite_has_no_failures(
        self, catalog_repo: FakeCatalogRepository, table_repo: FakeWeightTableRepository
    ) -> None:
        """Every core check passes or carries a ledger note, J30 included."""
        uc = RunSuite(catalog_repo, table_repo)
        report = await uc.execute(
            RunSuiteInput(
                suite=Suite.CORE,
                rational_keys=("E6/I26", "E6/I23", "E6/I14", "E7/J55", "E7/J16"),
                shuffle_keys=("E6/I26", "E6/I25", "E6/I24", "E6/I23"),
            )
        )
        assert report.failed_keys == []
        assert report.count(CheckStatus.FAIL) == 0
        assert "E7/J30" in [item.key for item in report.items]
