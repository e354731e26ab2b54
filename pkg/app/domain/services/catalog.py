"""Turning catalog text into polynomials, matrices, ideals and complexes."""

import logging
import re
from collections.abc import Sequence
from functools import reduce

from app.domain.enums import Labelling, Variant
from app.domain.errors import (
    NotFoundError,
    ParseError,
    RingMismatchError,
    ValidationError,
    VerificationFailure,
)
from app.domain.models.catalog import Catalog, CatalogEntry, LinkEntry
from app.domain.models.complex import BettiTable, GradedFreeComplex
from app.domain.models.ideal import Ideal
from app.domain.models.matrix import PolyMatrix
from app.domain.models.polynomial import Polynomial
from app.domain.models.ring import AmbientRing
from app.domain.services import complexes
from app.domain.services.groebner import ideals_equal
from app.domain.services.matrices import (
    minors2,
    pfaffian,
    principal_pfaffians,
    product_entries,
    submaximal_pfaffians,
    variety_of_complexes,
)
from app.domain.value_objects.field import CoefficientField

logger = logging.getLogger(__name__)

_DERIVATIVE_LINE = re.compile(r"^f(\d+)\s*=\s*(.+)$")
_F_RANGE = re.compile(r"^f(\d+)\.\.f(\d+)$")
_F_SINGLE = re.compile(r"^f(\d+)$")
_X_RANGE = re.compile(r"^x(\d+)\.\.x(\d+)$")
_CELL = re.compile(r"^cell\(f(\d+)\)$")
_CALL = re.compile(r"^(\w+)\((.*)\)$")

CUBIC_KEYS = {Labelling.E7: "cubic/E7", Labelling.E6D5: "cubic/E6D5"}
DERIVATIVE_KEYS = {Labelling.E7: "derivatives/E7", Labelling.E6D5: "derivatives/E6D5"}
CELL_DROPPED = ("z1", "z2", "z3", "z4", "z5", "zb1", "zb2", "zb3", "zb4", "zb5")
HUNEKE_ULRICH_KEY = "E7/J51"


def cell_specialize(p: Polynomial, cell_ring: AmbientRing) -> Polynomial:
    """Restrict a polynomial of ring E6 to the open cell.

    Sets x = 1 and drops every term that involves a z or zb variable; the rest
    lives in the 16 cell variables.
    """
    return p.specialize({"x": 1}).drop_terms_with(CELL_DROPPED).by_name(cell_ring)


def _split_args(text: str) -> list[str]:
    return [a.strip() for a in text.split(",") if a.strip()]


def _range(a: int, b: int) -> range:
    return range(a, b + 1) if a <= b else range(a, b - 1, -1)


def _expanded(lines: Sequence[str]) -> set[str]:
    """Generator tokens with ``fA..fB`` and ``xA..xB`` spelled out."""
    out: set[str] = set()
    for line in lines:
        for token in _split_args(line):
            match = _F_RANGE.match(token) or _X_RANGE.match(token)
            if match is None:
                out.add(token)
            else:
                bounds = _range(int(match.group(1)), int(match.group(2)))
                out |= {f"{token[0]}{i}" for i in bounds}
    return out


class CatalogBuilder:
    """Builds the algebraic objects of a catalog over one coefficient field.

    Args:
        catalog: Parsed catalog.
        coefficient_field: Field of every ring built.
    """

    def __init__(self, catalog: Catalog, coefficient_field: CoefficientField) -> None:
        self._catalog = catalog
        self._field = coefficient_field
        self._rings: dict[str, AmbientRing] = {}
        self._derivatives: dict[tuple[Labelling, Variant], dict[int, Polynomial]] = {}
        self._ideals: dict[tuple[str, Variant], Ideal] = {}

    @property
    def catalog(self) -> Catalog:
        return self._catalog

    @property
    def coefficient_field(self) -> CoefficientField:
        return self._field

    def ring(self, name: str) -> AmbientRing:
        if name not in self._rings:
            self._rings[name] = AmbientRing.canonical(name, self._field)
        return self._rings[name]

    # --- Cubic and derivatives ---

    def cubic(self, labelling: Labelling) -> Polynomial:
        """The cubic invariant; the E6D5 labelling lives in ring E6."""
        entry = self._catalog.entry(CUBIC_KEYS[labelling])
        if len(entry.generators) != 1:
            raise ParseError(f"{entry.key} must hold exactly one polynomial")
        return Polynomial.parse(entry.generators[0], self.ring(entry.ring), indexed=entry.indexed)

    def derivatives(
        self, labelling: Labelling, variant: Variant = Variant.EMENDED
    ) -> dict[int, Polynomial]:
        """The listed derivatives f_i by index.

        Raises:
            ParseError: If a line is not ``fN = polynomial``.
        """
        cache_key = (labelling, variant)
        if cache_key not in self._derivatives:
            entry = self._catalog.entry(DERIVATIVE_KEYS[labelling])
            lines = entry.generators
            if variant is Variant.EMENDED and entry.emended:
                lines = entry.emended
            ring = self.ring(entry.ring)
            out: dict[int, Polynomial] = {}
            for line in lines:
                match = _DERIVATIVE_LINE.match(line.strip())
                if match is None:
                    raise ParseError(f"Bad derivative line in {entry.key}: {line!r}")
                out[int(match.group(1))] = Polynomial.parse(
                    match.group(2), ring, indexed=entry.indexed
                )
            self._derivatives[cache_key] = out
        return self._derivatives[cache_key]

    def derivative(
        self, labelling: Labelling, i: int, variant: Variant = Variant.EMENDED
    ) -> Polynomial:
        """The catalog f_i.

        Raises:
            NotFoundError: If i is outside 1..27 or missing from the list.
        """
        table = self.derivatives(labelling, variant)
        if i not in table:
            raise NotFoundError(f"No derivative f{i} in the {labelling} list")
        return table[i]

    # --- Generators ---

    def _token(self, token: str, ring: AmbientRing, indexed: bool) -> list[Polynomial]:
        token = token.strip()
        if token == "Q":
            return [self._in_ring(self.cubic(Labelling.E7), ring)]
        if match := _F_RANGE.match(token):
            return [
                self._in_ring(self.derivative(Labelling.E7, i), ring)
                for i in _range(int(match.group(1)), int(match.group(2)))
            ]
        if match := _F_SINGLE.match(token):
            return [self._in_ring(self.derivative(Labelling.E7, int(match.group(1))), ring)]
        if match := _X_RANGE.match(token):
            return [
                Polynomial.variable(ring, f"x{i}")
                for i in _range(int(match.group(1)), int(match.group(2)))
            ]
        if match := _CELL.match(token):
            f = self.derivative(Labelling.E6D5, int(match.group(1)))
            return [cell_specialize(f, ring)]
        return [Polynomial.parse(token, ring, indexed=indexed)]

    @staticmethod
    def _in_ring(p: Polynomial, ring: AmbientRing) -> Polynomial:
        if p.ring.variables != ring.variables:
            raise RingMismatchError(f"{p.ring.name} polynomials cannot enter ring {ring.name}")
        return p if p.ring == ring else p.with_order(ring)

    def polynomials(self, entry: CatalogEntry, tokens: Sequence[str]) -> list[Polynomial]:
        """Resolve generator tokens.

        A token is a polynomial, ``Q``, ``fN``, ``fA..fB``, ``xA..xB`` or ``cell(fN)``.
        """
        ring = self.ring(entry.ring)
        out: list[Polynomial] = []
        for line in tokens:
            for token in _split_args(line):
                out += self._token(token, ring, entry.indexed)
        return out

    def matrix(self, entry: CatalogEntry, name: str) -> PolyMatrix:
        """A named matrix of the entry; ``M^T`` is the transpose of M.

        Raises:
            NotFoundError: If the entry has no such matrix.
        """
        transpose = name.endswith("^T")
        base = name[:-2] if transpose else name
        if base not in entry.matrices:
            raise NotFoundError(f"{entry.key} has no matrix {base}")
        m = PolyMatrix.parse(entry.matrices[base], self.ring(entry.ring), indexed=entry.indexed)
        return m.transpose() if transpose else m

    def build(self, entry: CatalogEntry, operation: str) -> list[Polynomial]:
        """Generators produced by one matrix operation such as ``pfaffians(M23)``.

        Raises:
            ParseError: If the operation is unknown or malformed.
        """
        match = _CALL.match(operation.strip())
        if match is None:
            raise ParseError(f"Bad build operation in {entry.key}: {operation!r}")
        op, args = match.group(1), [self.matrix(entry, a) for a in _split_args(match.group(2))]
        if op == "minors2" and len(args) == 1:
            return minors2(args[0])
        if op == "pfaffians" and len(args) == 1:
            return [p for p in submaximal_pfaffians(args[0]) if not p.is_zero]
        if op == "pfaffians4" and len(args) == 1:
            return principal_pfaffians(args[0], 4)
        if op == "pfaffian" and len(args) == 1:
            return [pfaffian(args[0])]
        if op == "varcomplex" and len(args) == 2:
            return variety_of_complexes(args[0], args[1])
        if op == "product" and len(args) == 2:
            return product_entries(args[0], args[1])
        raise ParseError(f"Unknown build operation in {entry.key}: {operation!r}")

    def _assemble(
        self, entry: CatalogEntry, builds: Sequence[str], tokens: Sequence[str], name: str
    ) -> Ideal:
        gens: list[Polynomial] = []
        for op in builds:
            gens += self.build(entry, op)
        gens += self.polynomials(entry, tokens)
        return Ideal(self.ring(entry.ring), tuple(g for g in gens if not g.is_zero), name)

    # --- Ideals ---

    def ideal(self, key: str, variant: Variant = Variant.EMENDED) -> Ideal:
        """The entry's ideal; the emended generator list is used unless ``printed`` is asked for.

        Raises:
            NotFoundError: If the key is unknown.
        """
        cache_key = (key, variant)
        if cache_key not in self._ideals:
            entry = self._catalog.entry(key)
            tokens = entry.generators
            if variant is Variant.EMENDED and entry.emended:
                tokens = entry.emended
            self._ideals[cache_key] = self._assemble(entry, entry.builds, tokens, key)
        return self._ideals[cache_key]

    def core_ideal(self, key: str) -> Ideal | None:
        entry = self._catalog.entry(key)
        if not entry.has_core:
            return None
        return self._assemble(entry, entry.core_builds, entry.core_generators, f"{key}'")

    def alt_ideal(self, key: str) -> Ideal | None:
        entry = self._catalog.entry(key)
        if not entry.has_alt:
            return None
        return self._assemble(entry, entry.alt_builds, entry.alt_generators, f"{key}/alt")

    def huneke_ulrich_build(self) -> Ideal:
        """``I_1(Y·X) + Pf(X)`` from the displayed matrices of J51, checked against the list.

        Raises:
            VerificationFailure: If the construction and the list differ as ideals.
        """
        built = self.alt_ideal(HUNEKE_ULRICH_KEY)
        if built is None:
            raise NotFoundError(f"{HUNEKE_ULRICH_KEY} carries no matrix construction")
        if not ideals_equal(built, self.ideal(HUNEKE_ULRICH_KEY)):
            raise VerificationFailure(
                [HUNEKE_ULRICH_KEY], "I_1(Y·X) + Pf(X) differs from the listed generators of J51"
            )
        return built

    def link_sequence(
        self, link: LinkEntry, variant: Variant = Variant.EMENDED
    ) -> list[Polynomial]:
        entry = self._catalog.entry(link.first)
        tokens = link.emended if variant is Variant.EMENDED and link.emended else link.sequence
        return self.polynomials(entry, tokens)

    # --- Recipes ---

    def _recipe_factors(self, entry: CatalogEntry) -> list[tuple[str, list[str]]]:
        if not entry.recipe:
            raise NotFoundError(f"{entry.key} has no structural recipe")
        factors = []
        for part in entry.recipe.split(" * "):
            match = _CALL.match(part.strip())
            if match is None:
                raise ParseError(f"Bad recipe factor in {entry.key}: {part!r}")
            factors.append((match.group(1), _split_args(match.group(2))))
        return factors

    def _factor_complex(self, entry: CatalogEntry, op: str, args: list[str]) -> GradedFreeComplex:
        if op == "koszul":
            if args == ["gen"]:
                return complexes.koszul_complex(self.ideal(entry.key).generators)
            return complexes.koszul_complex(self.polynomials(entry, args))
        if op == "pfaffian_complex" and len(args) == 1:
            return complexes.pfaffian_complex(self.matrix(entry, args[0]))
        if op == "eagon_northcott" and len(args) == 1:
            return complexes.eagon_northcott(self.matrix(entry, args[0]))
        raise ParseError(f"Unknown recipe factor {op} in {entry.key}")

    def _factor_betti(self, entry: CatalogEntry, op: str, args: list[str]) -> BettiTable:
        if op == "koszul":
            if args == ["gen"]:
                gens: Sequence[Polynomial] = self.ideal(entry.key).generators
            else:
                gens = self.polynomials(entry, args)
            degrees = [g.homogeneous_degree for g in gens]
            if any(d is None for d in degrees):
                raise ValidationError(f"Koszul factor of {entry.key} is not homogeneous")
            return complexes.koszul_betti([d for d in degrees if d is not None])
        return self._factor_complex(entry, op, args).betti()

    def recipe_betti(self, key: str) -> BettiTable:
        """Betti table of the recipe complex, without forming the tensor product."""
        entry = self._catalog.entry(key)
        tables = [self._factor_betti(entry, op, args) for op, args in self._recipe_factors(entry)]
        return reduce(BettiTable.tensor, tables)

    def recipe_complex(self, key: str) -> GradedFreeComplex:
        """The recipe's tensor product, built in full."""
        entry = self._catalog.entry(key)
        factors = [self._factor_complex(entry, op, a) for op, a in self._recipe_factors(entry)]
        logger.debug("recipe %s: %d factors", key, len(factors))
        return reduce(complexes.tensor, factors)

    # --- Chains ---

    def nested_pairs(self, family: str = "E7") -> list[tuple[str, str]]:
        """Pairs ``(J_s, J_(s-1))`` of consecutive nodes whose token lists are nested."""
        by_node = {
            e.node: e
            for e in self._catalog.entries.values()
            if e.is_ideal and e.family == family and e.node is not None and e.generators
        }
        pairs = []
        for node in sorted(by_node, reverse=True):
            lower = by_node.get(node - 1)
            if lower is None:
                continue
            upper = by_node[node]
            if _expanded(upper.emended or upper.generators) <= _expanded(
                lower.emended or lower.generators
            ):
                pairs.append((upper.key, lower.key))
        return pairs
