"""Use case for showing one catalog entry with its generators built."""

import logging
from dataclasses import dataclass, field

from app.application.dtos import EntryView
from app.application.interfaces.catalog_repository import CatalogRepository
from app.domain.enums import Variant
from app.domain.models.polynomial import Polynomial
from app.domain.services.catalog import DERIVATIVE_KEYS, CatalogBuilder
from app.domain.value_objects.run_config import RunConfig

logger = logging.getLogger(__name__)


@dataclass
class ShowEntryInput:
    """Input data for showing an entry.

    Attributes:
        key: Catalog key.
        config: Run configuration; fixes the coefficient field.
        variant: Emended or printed generator text.
    """

    key: str
    config: RunConfig = field(default_factory=RunConfig)
    variant: Variant = Variant.EMENDED


class ShowEntry:
    """Builds the generators of one entry for display.

    Args:
        catalog_repo: Repository for catalog access.
    """

    def __init__(self, catalog_repo: CatalogRepository) -> None:
        self._catalog_repo = catalog_repo

    async def execute(self, input_data: ShowEntryInput) -> EntryView:
        """Execute the show entry use case.

        Raises:
            NotFoundError: If the key is unknown.
            ParseError: If a generator does not parse in the entry's ring.
        """
        catalog = await self._catalog_repo.load()
        entry = catalog.entry(input_data.key)
        builder = CatalogBuilder(catalog, input_data.config.coefficient_field)
        labellings = {key: labelling for labelling, key in DERIVATIVE_KEYS.items()}
        generators: tuple[Polynomial, ...]
        if entry.is_ideal:
            generators = builder.ideal(entry.key, input_data.variant).generators
        elif entry.key in labellings:
            table = builder.derivatives(labellings[entry.key], input_data.variant)
            generators = tuple(table[i] for i in sorted(table))
        else:
            generators = tuple(builder.polynomials(entry, entry.generators))
        logger.info("show %s: %d generators", entry.key, len(generators))
        return EntryView(entry=entry, generators=generators, config=input_data.config)
