"""Polynomial ideals and monomial ideals."""

from collections.abc import Iterable
from dataclasses import dataclass, field

from app.domain.errors import RingMismatchError, ValidationError
from app.domain.models.polynomial import Polynomial
from app.domain.models.ring import AmbientRing
from app.domain.value_objects.monomial import Monomial, divides
from app.domain.value_objects.monomial_order import MonomialOrder


@dataclass
class Ideal:
    """An ideal given by generators, with a write-once Gröbner basis cache.

    Attributes:
        ring: Ambient ring; its order is the default order for Gröbner bases.
        generators: Nonzero generators. An empty tuple is the zero ideal.
        name: Optional label such as ``E6/I23``.

    Raises:
        ValidationError: If a generator is zero.
        RingMismatchError: If a generator lives in another ring.
    """

    ring: AmbientRing
    generators: tuple[Polynomial, ...]
    name: str = ""
    _bases: dict[MonomialOrder, tuple[Polynomial, ...]] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        self.generators = tuple(self.generators)
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatchError(f"Generator {g} is not in ring {self.ring.name}")
            if g.is_zero:
                raise ValidationError("Ideal generators must be nonzero")

    @classmethod
    def of(cls, generators: Iterable[Polynomial], name: str = "") -> "Ideal":
        """Ideal of the nonzero members of ``generators``; the ring is taken from them.

        Raises:
            ValidationError: If no generator is given (the ring would be unknown).
        """
        gens = list(generators)
        if not gens:
            raise ValidationError("Cannot infer the ring of an empty generator list")
        return cls(gens[0].ring, tuple(g for g in gens if not g.is_zero), name)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def cached_basis(self, order: MonomialOrder) -> tuple[Polynomial, ...] | None:
        return self._bases.get(order)

    def store_basis(self, order: MonomialOrder, basis: tuple[Polynomial, ...]) -> None:
        """Record a reduced Gröbner basis; an existing entry is never replaced."""
        self._bases.setdefault(order, basis)

    def variables_used(self) -> tuple[str, ...]:
        used: set[int] = set()
        for g in self.generators:
            used |= g.support()
        return tuple(v for i, v in enumerate(self.ring.variables) if i in used)

    def restrict_to_used(self) -> "Ideal":
        """The same generators in the subring of the variables they involve."""
        sub = self.ring.subring(self.variables_used(), name=f"{self.ring.name}|used")
        return Ideal(sub, tuple(g.restrict(sub) for g in self.generators), self.name)

    def __str__(self) -> str:
        body = ", ".join(g.to_text() for g in self.generators)
        return f"({body})" if body else "(0)"


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators.

    Attributes:
        nvars: Number of variables.
        generators: Minimal generators, sorted; no generator divides another.
    """

    nvars: int
    generators: tuple[Monomial, ...]

    @classmethod
    def from_monomials(cls, nvars: int, monomials: Iterable[Monomial]) -> "MonomialIdeal":
        """Build the ideal, discarding non-minimal generators."""
        candidates = sorted(set(monomials), key=lambda m: (sum(m), m))
        minimal: list[Monomial] = []
        for m in candidates:
            if len(m) != nvars:
                raise ValidationError(f"Monomial {m} does not have {nvars} exponents")
            if not any(divides(g, m) for g in minimal):
                minimal.append(m)
        return cls(nvars, tuple(sorted(minimal)))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(not any(m) for m in self.generators)

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.generators)
