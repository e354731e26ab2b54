"""Catalog entries as read from the data file, before any polynomial is built."""

from dataclasses import dataclass, field

from app.domain.errors import NotFoundError
from app.domain.models.complex import BettiTable
from app.domain.value_objects.t_polynomial import TPolynomial


@dataclass(frozen=True)
class Expectation:
    """Values printed in the tables for one entry.

    Attributes:
        codim: Printed codimension (E6 entries).
        dim: Printed dimension (E7 entries).
        h: Printed numerator of the Hilbert series.
        gorenstein: Printed Gorenstein flag.
        description: Printed description tag.
        twists: Displayed minimal resolution of the entry.
        totals: Displayed total Betti numbers of the entry.
        core_twists: Displayed resolution of the core ideal.
        core_totals: Displayed total Betti numbers of the core ideal.
        core_h: Printed numerator of the core ideal.
    """

    codim: int | None = None
    dim: int | None = None
    h: TPolynomial | None = None
    gorenstein: bool | None = None
    description: str = ""
    twists: BettiTable | None = None
    totals: tuple[int, ...] | None = None
    core_twists: BettiTable | None = None
    core_totals: tuple[int, ...] | None = None
    core_h: TPolynomial | None = None


@dataclass(frozen=True)
class CatalogEntry:
    """One ``[key]`` block of the catalog, with polynomial text kept verbatim.

    Attributes:
        key: Entry key such as ``E6/I23``.
        ring: Name of the ambient ring.
        node: Node of the Schubert cell in the weight tables.
        core_suite: Member of the gating subset of the core suite.
        indexed: Variables are written ``x1..xN`` by position.
        source: Provenance note.
        generators: Printed generator tokens.
        emended: Corrected generator tokens, empty when the printed text stands.
        builds: Generator-producing matrix operations.
        matrices: Matrix text by name.
        core_generators: Tokens of the core ideal.
        core_builds: Matrix operations producing the core ideal.
        alt_generators: Tokens of an independent presentation of the same ideal.
        alt_builds: Matrix operations of that presentation.
        recipe: Tensor product of structured complexes resolving the entry.
        licci_core: Apply the licci criterion to the core ideal.
        expect: Printed values.
        ledger: Known slips by field name.
    """

    key: str
    ring: str
    node: int | None = None
    core_suite: bool = False
    indexed: bool = False
    source: str = ""
    generators: tuple[str, ...] = ()
    emended: tuple[str, ...] = ()
    builds: tuple[str, ...] = ()
    matrices: dict[str, str] = field(default_factory=dict, hash=False)
    core_generators: tuple[str, ...] = ()
    core_builds: tuple[str, ...] = ()
    alt_generators: tuple[str, ...] = ()
    alt_builds: tuple[str, ...] = ()
    recipe: str = ""
    licci_core: bool = False
    expect: Expectation = field(default_factory=Expectation)
    ledger: dict[str, str] = field(default_factory=dict, hash=False)

    @property
    def family(self) -> str:
        """``E6`` or ``E7``, taken from the key."""
        return self.key.split("/")[-2] if "/" in self.key else self.key

    @property
    def is_ideal(self) -> bool:
        return self.key.startswith(("E6/", "E7/"))

    @property
    def has_core(self) -> bool:
        return bool(self.core_generators or self.core_builds)

    @property
    def has_alt(self) -> bool:
        return bool(self.alt_generators or self.alt_builds)


@dataclass(frozen=True)
class LinkEntry:
    """A printed linkage claim.

    Attributes:
        key: Entry key such as ``link/E7/J50-J51``.
        first: Key of the first ideal.
        second: Key of the second ideal.
        sequence: Printed linking sequence tokens.
        emended: Corrected sequence, empty when the printed text stands.
        source: Provenance note.
        ledger: Known slips by field name.
    """

    key: str
    first: str
    second: str
    sequence: tuple[str, ...]
    emended: tuple[str, ...] = ()
    source: str = ""
    ledger: dict[str, str] = field(default_factory=dict, hash=False)


@dataclass(frozen=True)
class Catalog:
    """All entries of a catalog file.

    Attributes:
        entries: Ideal, cubic and derivative entries by key, in file order.
        links: Linkage claims by key.
    """

    entries: dict[str, CatalogEntry] = field(default_factory=dict, hash=False)
    links: dict[str, LinkEntry] = field(default_factory=dict, hash=False)

    def entry(self, key: str) -> CatalogEntry:
        """Entry by key.

        Raises:
            NotFoundError: If the key is unknown.
        """
        try:
            return self.entries[key]
        except KeyError:
            raise NotFoundError(f"Unknown catalog key {key}") from None

    def link(self, key: str) -> LinkEntry:
        try:
            return self.links[key]
        except KeyError:
            raise NotFoundError(f"Unknown link key {key}") from None

    def link_between(self, first: str, second: str) -> LinkEntry | None:
        for link in self.links.values():
            if {link.first, link.second} == {first, second}:
                return link
        return None

    def ideal_keys(self) -> list[str]:
        return [k for k, e in self.entries.items() if e.is_ideal]
