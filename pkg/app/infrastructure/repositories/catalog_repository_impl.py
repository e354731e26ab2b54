"""File-backed implementations of the catalog and weight-table repositories."""

import asyncio
from pathlib import Path

from app.application.interfaces.catalog_repository import CatalogRepository
from app.application.interfaces.weight_table_repository import WeightTableRepository
from app.domain.errors import NotFoundError
from app.domain.models.catalog import Catalog
from app.domain.models.crystal import WeightTable
from app.infrastructure.catalog.parser import parse_catalog, parse_weight_tables

DATA_DIR = Path(__file__).resolve().parent.parent / "catalog" / "data"
DEFAULT_CATALOG = DATA_DIR / "catalog.txt"
DEFAULT_WEIGHT_TABLES = DATA_DIR / "weyl_tables.txt"


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise NotFoundError(f"Data file {path} does not exist") from None


class FileCatalogRepository(CatalogRepository):
    """Reads the catalog from a UTF-8 text file, once.

    Args:
        path: Catalog file; None means the packaged copy.
    """

    def __init__(self, path: Path | None = None) -> None:
        self._path = path or DEFAULT_CATALOG
        self._catalog: Catalog | None = None

    async def load(self) -> Catalog:
        """Load and cache the catalog.

        Raises:
            NotFoundError: If the file does not exist.
            ParseError: If the text is malformed.
        """
        if self._catalog is None:
            text = await asyncio.to_thread(_read, self._path)
            self._catalog = parse_catalog(text)
        return self._catalog


class FileWeightTableRepository(WeightTableRepository):
    """Reads printed weight tables from a UTF-8 text file, once.

    Args:
        path: Table file; None means the packaged copy.
    """

    def __init__(self, path: Path | None = None) -> None:
        self._path = path or DEFAULT_WEIGHT_TABLES
        self._tables: list[WeightTable] | None = None

    async def find_all(self) -> list[WeightTable]:
        if self._tables is None:
            text = await asyncio.to_thread(_read, self._path)
            self._tables = parse_weight_tables(text)
        return list(self._tables)

    async def find_by_label(self, label: str) -> WeightTable | None:
        for table in await self.find_all():
            if table.label == label:
                return table
        return None
