"""Interface for catalog access."""

from abc import ABC, abstractmethod

from app.domain.models.catalog import Catalog


class CatalogRepository(ABC):
    """Abstract repository for the catalog of ideals, cubics and linkage claims."""

    @abstractmethod
    async def load(self) -> Catalog:
        """Load the whole catalog.

        Returns:
            The parsed Catalog; it is read-only once returned.

        Raises:
            ParseError: If the catalog text is malformed.
        """
        ...
