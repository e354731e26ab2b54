"""Use case for the Gorenstein test of a catalog ideal."""

import logging

from app.application.dtos import GorensteinResult
from app.application.interfaces.catalog_repository import CatalogRepository
from app.application.interfaces.weight_table_repository import WeightTableRepository
from app.application.use_cases.ideals.load_ideal import IdealInput, load_ideal
from app.domain.enums import CheckStatus
from app.domain.services.hilbert import hilbert_series
from app.domain.services.verification import TABLE_OF_FAMILY, hilbert_checks, node_checks

logger = logging.getLogger(__name__)


class CheckGorenstein:
    """Decides Gorensteinness by palindromicity of the h-vector.

    Args:
        catalog_repo: Repository for catalog access.
        table_repo: Repository for the printed weight tables.
    """

    def __init__(
        self, catalog_repo: CatalogRepository, table_repo: WeightTableRepository
    ) -> None:
        self._catalog_repo = catalog_repo
        self._table_repo = table_repo

    async def execute(self, input_data: IdealInput) -> GorensteinResult:
        """Execute the Gorenstein use case.

        Raises:
            NotFoundError: If the key is unknown.
        """
        loaded = await load_ideal(self._catalog_repo, input_data)
        entry = loaded.entry
        data = hilbert_series(loaded.ideal)
        table = await self._table_repo.find_by_label(TABLE_OF_FAMILY.get(entry.family, ""))
        appendix = None
        if table is not None and entry.node is not None:
            appendix = next((r.gorenstein for r in table.rows if r.node == entry.node), None)
        tables = {table.label: table} if table is not None else {}
        checks = [
            c
            for c in hilbert_checks(entry, data) + node_checks(entry, data, tables)
            if c.check in ("gorenstein", "appendix_gorenstein")
        ]
        if any(c.status is not CheckStatus.PASS for c in checks):
            logger.info("gorenstein %s disagrees with a printed flag", entry.key)
        return GorensteinResult(
            key=input_data.key,
            variant=input_data.variant,
            config=input_data.config,
            checks=tuple(checks),
            palindromic=data.is_palindromic,
            h_vector=str(data.h_vector),
            printed=entry.expect.gorenstein,
            appendix=appendix,
        )
