"""Use case for the licci criterion on a catalog ideal."""

import logging

from app.application.dtos import LicciResult
from app.application.interfaces.catalog_repository import CatalogRepository
from app.application.use_cases.ideals.load_ideal import IdealInput, load_ideal
from app.domain.services.hilbert import hilbert_series
from app.domain.services.linkage import licci_criterion
from app.domain.services.resolution import minimal_betti

logger = logging.getLogger(__name__)


class CheckLicci:
    """Applies the licci criterion to the entry, or to its core ideal when marked so.

    Args:
        catalog_repo: Repository for catalog access.
    """

    def __init__(self, catalog_repo: CatalogRepository) -> None:
        self._catalog_repo = catalog_repo

    async def execute(self, input_data: IdealInput) -> LicciResult:
        """Execute the licci use case.

        Raises:
            NotFoundError: If the key is unknown.
            PreconditionError: If the resolution length differs from the codimension.
            StepBoundExceeded: If the resolution is longer than the configured bound.
        """
        loaded = await load_ideal(self._catalog_repo, input_data)
        target = loaded.ideal
        if loaded.entry.licci_core:
            core = loaded.builder.core_ideal(input_data.key)
            if core is not None:
                target = core
        betti = minimal_betti(target, input_data.config.max_steps)
        codim = hilbert_series(target).codim
        verdict = licci_criterion(betti, codim)
        logger.info("licci %s on %s: %s", input_data.key, target.name, verdict)
        return LicciResult(
            key=input_data.key,
            variant=input_data.variant,
            config=input_data.config,
            target=target.name,
            codim=codim,
            betti=betti,
            verdict=verdict,
        )
