"""Dependency wiring for the command-line layer."""

from pathlib import Path

from app.application.interfaces.catalog_repository import CatalogRepository
from app.application.interfaces.weight_table_repository import WeightTableRepository
from app.application.use_cases.catalog.list_entries import ListEntries
from app.application.use_cases.catalog.show_entry import ShowEntry
from app.application.use_cases.graphs.build_graph import BuildGraph
from app.application.use_cases.ideals.betti_numbers import ComputeBetti
from app.application.use_cases.ideals.gorenstein import CheckGorenstein
from app.application.use_cases.ideals.groebner_basis import ComputeGroebnerBasis
from app.application.use_cases.ideals.hilbert_series import ComputeHilbertSeries
from app.application.use_cases.ideals.licci import CheckLicci
from app.application.use_cases.linkage.check_link import CheckLink
from app.application.use_cases.verify.run_suite import RunSuite
from app.config import settings
from app.infrastructure.repositories.catalog_repository_impl import (
    FileCatalogRepository,
    FileWeightTableRepository,
)


def _path(value: str) -> Path | None:
    return Path(value) if value else None


# Singletons
_catalog_repo: CatalogRepository = FileCatalogRepository(_path(settings.CATALOG_PATH))
_table_repo: WeightTableRepository = FileWeightTableRepository(
    _path(settings.WEYL_TABLES_PATH)
)


# --- Repos ---


def get_catalog_repo() -> CatalogRepository:
    """Provide the CatalogRepository singleton instance."""
    return _catalog_repo


def get_table_repo() -> WeightTableRepository:
    """Provide the WeightTableRepository singleton instance."""
    return _table_repo


# --- Use Cases ---


def get_list_entries() -> ListEntries:
    return ListEntries(get_catalog_repo())


def get_show_entry() -> ShowEntry:
    return ShowEntry(get_catalog_repo())


def get_groebner_basis() -> ComputeGroebnerBasis:
    return ComputeGroebnerBasis(get_catalog_repo())


def get_hilbert_series() -> ComputeHilbertSeries:
    return ComputeHilbertSeries(get_catalog_repo(), get_table_repo())


def get_check_gorenstein() -> CheckGorenstein:
    return CheckGorenstein(get_catalog_repo(), get_table_repo())


def get_compute_betti() -> ComputeBetti:
    return ComputeBetti(get_catalog_repo())


def get_check_licci() -> CheckLicci:
    return CheckLicci(get_catalog_repo())


def get_check_link() -> CheckLink:
    return CheckLink(get_catalog_repo())


def get_build_graph() -> BuildGraph:
    return BuildGraph(get_table_repo())


def get_run_suite() -> RunSuite:
    return RunSuite(get_catalog_repo(), get_table_repo())
