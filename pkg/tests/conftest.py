"""Shared test fixtures for the Schubert-cell test suite."""

import pytest

from app.domain.models.catalog import Catalog
from app.domain.models.crystal import WeightTable
from app.domain.models.ring import AmbientRing
from app.domain.services.catalog import CatalogBuilder
from app.domain.value_objects.field import CoefficientField
from app.infrastructure.catalog.parser import parse_catalog, parse_weight_tables
from app.infrastructure.repositories.catalog_repository_impl import (
    DEFAULT_CATALOG,
    DEFAULT_WEIGHT_TABLES,
)

PRIME = 32003


@pytest.fixture
def qq() -> CoefficientField:
    """The rationals."""
    return CoefficientField.rationals()


@pytest.fixture
def fp() -> CoefficientField:
    """The default prime field F_32003."""
    return CoefficientField.prime(PRIME)


@pytest.fixture
def xyz(qq: CoefficientField) -> AmbientRing:
    """QQ[x, y, z] under degrevlex."""
    return AmbientRing("R", ("x", "y", "z"), qq)


@pytest.fixture
def abcdef(qq: CoefficientField) -> AmbientRing:
    """QQ[a..f], room for a generic 4x4 skew matrix or a 2x3 matrix."""
    return AmbientRing("S", ("a", "b", "c", "d", "e", "f"), qq)


@pytest.fixture
def ten(qq: CoefficientField) -> AmbientRing:
    """QQ[u0..u9], enough for a generic 5x5 skew matrix or a 2x5 matrix."""
    return AmbientRing("T", tuple(f"u{i}" for i in range(10)), qq)


@pytest.fixture(scope="session")
def catalog_text() -> str:
    return DEFAULT_CATALOG.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def catalog(catalog_text: str) -> Catalog:
    """The packaged catalog, parsed once."""
    return parse_catalog(catalog_text)


@pytest.fixture(scope="session")
def weight_tables() -> list[WeightTable]:
    """The packaged weight tables, parsed once."""
    return parse_weight_tables(DEFAULT_WEIGHT_TABLES.read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def builder(catalog: Catalog) -> CatalogBuilder:
    """Catalog builder over F_32003; ideals and Gröbner bases are cached across tests."""
    return CatalogBuilder(catalog, CoefficientField.prime(PRIME))


@pytest.fixture(scope="session")
def rational_builder(catalog: Catalog) -> CatalogBuilder:
    """Catalog builder over the rationals."""
    return CatalogBuilder(catalog, CoefficientField.rationals())
