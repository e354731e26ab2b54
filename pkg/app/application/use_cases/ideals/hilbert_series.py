"""Use case for the Hilbert series of a catalog ideal."""

import logging
import time
from dataclasses import dataclass

from app.application.dtos import HilbertResult
from app.application.interfaces.catalog_repository import CatalogRepository
from app.application.interfaces.weight_table_repository import WeightTableRepository
from app.application.use_cases.ideals.load_ideal import IdealInput, load_ideal
from app.domain.errors import ValidationError
from app.domain.services.hilbert import hilbert_function_prefix, hilbert_series
from app.domain.services.verification import hilbert_checks, node_checks

logger = logging.getLogger(__name__)


@dataclass
class HilbertInput(IdealInput):
    """Input data for the Hilbert series.

    Attributes:
        prefix: Also count the Hilbert function up to this degree.
    """

    prefix: int | None = None


class ComputeHilbertSeries:
    """Computes codim, dim and h-vector and compares them with the tables.

    Args:
        catalog_repo: Repository for catalog access.
        table_repo: Repository for the printed weight tables.
    """

    def __init__(
        self, catalog_repo: CatalogRepository, table_repo: WeightTableRepository
    ) -> None:
        self._catalog_repo = catalog_repo
        self._table_repo = table_repo

    async def execute(self, input_data: HilbertInput) -> HilbertResult:
        """Execute the Hilbert series use case.

        Raises:
            NotFoundError: If the key is unknown.
            ValidationError: If the prefix degree is negative.
        """
        if input_data.prefix is not None and input_data.prefix < 0:
            raise ValidationError("Prefix degree cannot be negative")
        loaded = await load_ideal(self._catalog_repo, input_data)
        start = time.perf_counter()
        data = hilbert_series(loaded.ideal)
        prefix: tuple[int, ...] = ()
        if input_data.prefix is not None:
            prefix = tuple(hilbert_function_prefix(loaded.ideal, input_data.prefix))
        tables = {t.label: t for t in await self._table_repo.find_all()}
        checks = hilbert_checks(loaded.entry, data) + node_checks(loaded.entry, data, tables)
        logger.info(
            "hilbert %s: codim %d, h %s in %.2fs",
            input_data.key,
            data.codim,
            data.h_vector,
            time.perf_counter() - start,
        )
        return HilbertResult(
            key=input_data.key,
            variant=input_data.variant,
            config=input_data.config,
            checks=tuple(checks),
            data=data,
            prefix=prefix,
        )
