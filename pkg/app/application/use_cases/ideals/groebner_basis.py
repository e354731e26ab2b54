"""Use case for the reduced Gröbner basis of a catalog ideal."""

import logging
import time

from app.application.dtos import GroebnerResult
from app.application.interfaces.catalog_repository import CatalogRepository
from app.application.use_cases.ideals.load_ideal import IdealInput, load_ideal
from app.domain.services.groebner import groebner_basis

logger = logging.getLogger(__name__)


class ComputeGroebnerBasis:
    """Computes the reduced degrevlex Gröbner basis of an entry.

    Args:
        catalog_repo: Repository for catalog access.
    """

    def __init__(self, catalog_repo: CatalogRepository) -> None:
        self._catalog_repo = catalog_repo

    async def execute(self, input_data: IdealInput) -> GroebnerResult:
        """Execute the Gröbner basis use case.

        Raises:
            NotFoundError: If the key is unknown.
        """
        loaded = await load_ideal(self._catalog_repo, input_data)
        start = time.perf_counter()
        basis = groebner_basis(loaded.ideal)
        logger.info(
            "gb %s: %d elements in %.2fs", input_data.key, len(basis), time.perf_counter() - start
        )
        return GroebnerResult(
            key=input_data.key,
            variant=input_data.variant,
            config=input_data.config,
            basis=basis,
        )
