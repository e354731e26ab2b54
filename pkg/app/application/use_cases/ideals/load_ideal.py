"""Shared input and loading step of the ``ideal`` use cases."""

from dataclasses import dataclass, field

from app.application.interfaces.catalog_repository import CatalogRepository
from app.domain.enums import Variant
from app.domain.errors import ValidationError
from app.domain.models.catalog import CatalogEntry
from app.domain.models.ideal import Ideal
from app.domain.services.catalog import CatalogBuilder
from app.domain.value_objects.run_config import RunConfig


@dataclass
class IdealInput:
    """Input data for a computation on one catalog ideal.

    Attributes:
        key: Catalog key such as ``E6/I23``.
        config: Run configuration.
        variant: Emended or printed generator text.
    """

    key: str
    config: RunConfig = field(default_factory=RunConfig)
    variant: Variant = Variant.EMENDED


@dataclass(frozen=True)
class LoadedIdeal:
    entry: CatalogEntry
    builder: CatalogBuilder
    ideal: Ideal


async def load_ideal(catalog_repo: CatalogRepository, input_data: IdealInput) -> LoadedIdeal:
    """Build the ideal of an entry over the configured field.

    Raises:
        NotFoundError: If the key is unknown.
        ValidationError: If the key names a cubic, derivative or link block.
    """
    catalog = await catalog_repo.load()
    entry = catalog.entry(input_data.key)
    if not entry.is_ideal:
        raise ValidationError(f"{entry.key} is not an ideal entry")
    builder = CatalogBuilder(catalog, input_data.config.coefficient_field)
    return LoadedIdeal(entry, builder, builder.ideal(entry.key, input_data.variant))
