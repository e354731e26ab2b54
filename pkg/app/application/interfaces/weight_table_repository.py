"""Interface for the printed weight tables of the minuscule graphs."""

from abc import ABC, abstractmethod

from app.domain.models.crystal import WeightTable


class WeightTableRepository(ABC):
    """Abstract repository for printed weight tables."""

    @abstractmethod
    async def find_all(self) -> list[WeightTable]:
        """Retrieve every table in file order."""
        ...

    @abstractmethod
    async def find_by_label(self, label: str) -> WeightTable | None:
        """Find the table of one graph.

        Args:
            label: Graph label such as ``E6/w1``.

        Returns:
            The WeightTable if present, None otherwise.
        """
        ...
