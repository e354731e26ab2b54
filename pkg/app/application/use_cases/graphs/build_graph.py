"""Use case for building a minuscule crystal graph."""

import logging
from dataclasses import dataclass

from app.application.dtos import GraphResult
from app.application.interfaces.weight_table_repository import WeightTableRepository
from app.domain.errors import NotFoundError
from app.domain.services.weyl import (
    crystal_for,
    has_unique_extremes,
    is_graded,
    is_self_dual,
    verify_appendix_tables,
)

logger = logging.getLogger(__name__)


@dataclass
class BuildGraphInput:
    """Input data for a crystal graph.

    Attributes:
        type_label: ``E6`` or ``E7``.
        weight: Fundamental weight such as ``w1``.
        verify: Compare with the printed weight table.
    """

    type_label: str
    weight: str
    verify: bool = False


class BuildGraph:
    """Builds the crystal graph of a minuscule weight.

    Args:
        table_repo: Repository for the printed weight tables.
    """

    def __init__(self, table_repo: WeightTableRepository) -> None:
        self._table_repo = table_repo

    async def execute(self, input_data: BuildGraphInput) -> GraphResult:
        """Execute the build graph use case.

        Raises:
            NotFoundError: If the type is unknown, or no table exists when verifying.
            ValidationError: If the weight is not minuscule.
        """
        graph = crystal_for(input_data.type_label, input_data.weight)
        appendix = None
        ledger: dict[tuple[int, str], str] = {}
        if input_data.verify:
            table = await self._table_repo.find_by_label(graph.label)
            if table is None:
                raise NotFoundError(f"No printed weight table for {graph.label}")
            appendix = verify_appendix_tables(graph, table.rows)
            ledger = table.ledger
        logger.info("graph %s: %d vertices", graph.label, len(graph))
        return GraphResult(
            graph=graph,
            graded=is_graded(graph),
            unique_extremes=has_unique_extremes(graph),
            self_dual=is_self_dual(graph),
            appendix=appendix,
            ledger=ledger,
        )
