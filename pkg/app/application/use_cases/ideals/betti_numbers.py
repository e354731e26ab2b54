"""Use case for the graded Betti numbers of a catalog ideal."""

import logging
import time
from dataclasses import dataclass

from app.application.dtos import BettiResult
from app.application.interfaces.catalog_repository import CatalogRepository
from app.application.use_cases.ideals.load_ideal import IdealInput, load_ideal
from app.domain.services.resolution import minimal_betti
from app.domain.services.verification import betti_checks

logger = logging.getLogger(__name__)


@dataclass
class BettiInput(IdealInput):
    """Input data for Betti numbers.

    Attributes:
        from_recipe: Read the Betti table off the structural recipe instead of
            computing a minimal resolution.
    """

    from_recipe: bool = False


class ComputeBetti:
    """Computes the Betti table of a minimal free resolution of R/I.

    Args:
        catalog_repo: Repository for catalog access.
    """

    def __init__(self, catalog_repo: CatalogRepository) -> None:
        self._catalog_repo = catalog_repo

    async def execute(self, input_data: BettiInput) -> BettiResult:
        """Execute the Betti numbers use case.

        Raises:
            NotFoundError: If the key is unknown, or it has no recipe when one is asked for.
            StepBoundExceeded: If the resolution is longer than the configured bound.
        """
        loaded = await load_ideal(self._catalog_repo, input_data)
        start = time.perf_counter()
        if input_data.from_recipe:
            betti = loaded.builder.recipe_betti(input_data.key)
        else:
            betti = minimal_betti(loaded.ideal, input_data.config.max_steps)
        logger.info(
            "betti %s: totals %s in %.2fs",
            input_data.key,
            betti.totals,
            time.perf_counter() - start,
        )
        return BettiResult(
            key=input_data.key,
            variant=input_data.variant,
            config=input_data.config,
            checks=tuple(betti_checks(loaded.entry, betti)),
            betti=betti,
        )
