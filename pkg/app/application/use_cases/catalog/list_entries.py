"""Use case for listing the ideal entries of the catalog."""

from app.application.interfaces.catalog_repository import CatalogRepository
from app.domain.models.catalog import CatalogEntry


class ListEntries:
    """Retrieves every ideal entry, E6 first, in catalog order.

    Args:
        catalog_repo: Repository for catalog access.
    """

    def __init__(self, catalog_repo: CatalogRepository) -> None:
        self._catalog_repo = catalog_repo

    async def execute(self, *, family: str | None = None) -> list[CatalogEntry]:
        """Execute the list entries use case.

        Args:
            family: ``E6`` or ``E7`` to list one family only.

        Returns:
            Ideal entries; cubic, derivative and link blocks are left out.
        """
        catalog = await self._catalog_repo.load()
        entries = [catalog.entries[k] for k in catalog.ideal_keys()]
        if family is not None:
            entries = [e for e in entries if e.family == family]
        return entries
