"""Ambient polynomial rings and the canonical rings of the catalog."""

from dataclasses import dataclass, field

from app.domain.errors import NotFoundError, ValidationError
from app.domain.value_objects.field import CoefficientField
from app.domain.value_objects.monomial_order import MonomialOrder

E7_VARIABLES: tuple[str, ...] = tuple(f"x{i}" for i in range(1, 28))

# Derivative index order: f_i is the partial with respect to the i-th name below.
E6_VARIABLES: tuple[str, ...] = (
    "x", "y0", "y45", "y35", "y34", "y25", "y24", "y15", "y23", "y14",
    "y2345", "y13", "y1345", "y12", "y1245", "y1235", "y1234",
    "z1", "z2", "z3", "z4", "z5", "zb5", "zb4", "zb3", "zb2", "zb1",
)

CELL_VARIABLES: tuple[str, ...] = (
    "y0", "y12", "y13", "y14", "y15", "y23", "y24", "y25", "y34", "y35", "y45",
    "y1234", "y1235", "y1245", "y1345", "y2345",
)

CANONICAL_RINGS: dict[str, tuple[str, ...]] = {
    "E7": E7_VARIABLES,
    "E6": E6_VARIABLES,
    "E6D5": CELL_VARIABLES,
}


@dataclass(frozen=True)
class AmbientRing:
    """A polynomial ring over an exact field with a fixed variable order.

    Attributes:
        name: Identifier such as ``E7`` or ``E6D5``.
        variables: Variable names; the position is the exponent index.
        coefficient_field: Coefficient field.
        order: Monomial order used for leading terms.

    Raises:
        ValidationError: If variable names repeat or the elimination block is too large.
    """

    name: str
    variables: tuple[str, ...]
    coefficient_field: CoefficientField = CoefficientField()
    order: MonomialOrder = MonomialOrder()
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if len(set(self.variables)) != len(self.variables):
            raise ValidationError(f"Ring {self.name} has repeated variable names")
        if self.order.block > len(self.variables):
            raise ValidationError("Elimination block exceeds the number of variables")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.variables)})

    @classmethod
    def canonical(
        cls, name: str, coefficient_field: CoefficientField | None = None
    ) -> "AmbientRing":
        """Return one of the registered rings ``E7``, ``E6`` or ``E6D5``.

        Raises:
            NotFoundError: If the name is not registered.
        """
        if name not in CANONICAL_RINGS:
            raise NotFoundError(f"Unknown ring {name}; expected one of {sorted(CANONICAL_RINGS)}")
        return cls(name, CANONICAL_RINGS[name], coefficient_field or CoefficientField())

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, variable: str) -> int:
        """Position of a variable.

        Raises:
            NotFoundError: If the variable is not in the ring.
        """
        try:
            return self._index[variable]
        except KeyError:
            raise NotFoundError(f"Variable {variable} not in ring {self.name}") from None

    def has_variable(self, variable: str) -> bool:
        return variable in self._index

    def with_field(self, coefficient_field: CoefficientField) -> "AmbientRing":
        return AmbientRing(self.name, self.variables, coefficient_field, self.order)

    def with_order(self, order: MonomialOrder) -> "AmbientRing":
        return AmbientRing(self.name, self.variables, self.coefficient_field, order)

    def subring(
        self, variables: list[str] | tuple[str, ...], name: str | None = None
    ) -> "AmbientRing":
        """Ring on a subset of the variables, kept in this ring's order."""
        for v in variables:
            self.index(v)
        wanted = set(variables)
        kept = tuple(v for v in self.variables if v in wanted)
        return AmbientRing(name or f"{self.name}|{len(kept)}", kept, self.coefficient_field)

    def extended(self, leading: tuple[str, ...], name: str | None = None) -> "AmbientRing":
        """Ring with extra variables placed in front, under the matching elimination order."""
        for v in leading:
            if v in self._index:
                raise ValidationError(f"Variable {v} already in ring {self.name}")
        return AmbientRing(
            name or f"{self.name}[{','.join(leading)}]",
            leading + self.variables,
            self.coefficient_field,
            MonomialOrder.elimination(len(leading)),
        )

    def __str__(self) -> str:
        return f"{self.name}({self.coefficient_field.name}, {self.nvars} vars)"
