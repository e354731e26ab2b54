"""Use case for checking that two catalog ideals are linked."""

import logging
from dataclasses import dataclass, field

from app.application.dtos import LinkResult
from app.application.interfaces.catalog_repository import CatalogRepository
from app.domain.enums import Variant
from app.domain.errors import NotFoundError, ValidationError
from app.domain.services.catalog import CatalogBuilder
from app.domain.services.linkage import check_linked
from app.domain.value_objects.run_config import RunConfig

logger = logging.getLogger(__name__)

# Sequence spec selecting the catalog's own linking sequence.
CATALOG_SEQUENCE = "@catalog"


@dataclass
class CheckLinkInput:
    """Input data for a linkage check.

    Attributes:
        first: Key of the first ideal.
        second: Key of the second ideal.
        sequence: Comma-separated generator tokens (``Q,f1,f2``), or ``@catalog``
            for the sequence stored with the catalog claim.
        config: Run configuration.
        variant: Emended or printed text of a stored sequence.
    """

    first: str
    second: str
    sequence: str = CATALOG_SEQUENCE
    config: RunConfig = field(default_factory=RunConfig)
    variant: Variant = Variant.EMENDED


class CheckLink:
    """Checks ``(c):I = J`` and ``(c):J = I`` with c a regular sequence.

    Args:
        catalog_repo: Repository for catalog access.
    """

    def __init__(self, catalog_repo: CatalogRepository) -> None:
        self._catalog_repo = catalog_repo

    async def execute(self, input_data: CheckLinkInput) -> LinkResult:
        """Execute the linkage use case.

        Raises:
            NotFoundError: If a key is unknown or no claim links the two entries.
            ValidationError: If the sequence spec is empty.
            PreconditionError: If a sequence element is missing from either ideal.
        """
        catalog = await self._catalog_repo.load()
        first_entry = catalog.entry(input_data.first)
        catalog.entry(input_data.second)
        builder = CatalogBuilder(catalog, input_data.config.coefficient_field)
        claim = None
        if input_data.sequence == CATALOG_SEQUENCE:
            claim = catalog.link_between(input_data.first, input_data.second)
            if claim is None:
                raise NotFoundError(
                    f"No stored linking sequence for {input_data.first} and {input_data.second}"
                )
            sequence = builder.link_sequence(claim, input_data.variant)
        else:
            if not input_data.sequence.strip():
                raise ValidationError("Linking sequence is empty")
            sequence = builder.polynomials(first_entry, [input_data.sequence])
        report = check_linked(
            builder.ideal(input_data.first, input_data.variant),
            builder.ideal(input_data.second, input_data.variant),
            sequence,
        )
        logger.info("link %s %s: linked=%s", input_data.first, input_data.second, report.linked)
        return LinkResult(
            report=report, config=input_data.config, claim=claim, variant=input_data.variant
        )
