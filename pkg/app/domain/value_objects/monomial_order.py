"""Monomial orders expressed as sort keys on exponent vectors."""

from collections.abc import Callable
from dataclasses import dataclass

from app.domain.enums import OrderKind
from app.domain.errors import ValidationError
from app.domain.value_objects.monomial import Monomial

SortKey = tuple[int, ...]


def _degrevlex_key(exps: Monomial) -> SortKey:
    return (-sum(exps), *reversed(exps))


def _lex_key(exps: Monomial) -> SortKey:
    return tuple(-e for e in exps)


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on a fixed number of variables.

    Orders are represented by a sort key: ascending keys list monomials from the
    largest to the smallest, so ``min`` over keys yields the leading monomial.

    Attributes:
        kind: degrevlex, lex or a two-block elimination order.
        block: Number of leading variables in the first block (elimination only).

    Raises:
        ValidationError: If an elimination order has an empty first block.
    """

    kind: OrderKind = OrderKind.DEGREVLEX
    block: int = 0

    def __post_init__(self) -> None:
        if self.kind is OrderKind.ELIMINATION and self.block < 1:
            raise ValidationError("Elimination order needs a non-empty first block")
        if self.kind is not OrderKind.ELIMINATION and self.block != 0:
            raise ValidationError("Only elimination orders take a block size")

    @classmethod
    def degrevlex(cls) -> "MonomialOrder":
        return cls(OrderKind.DEGREVLEX)

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls(OrderKind.LEX)

    @classmethod
    def elimination(cls, block: int) -> "MonomialOrder":
        return cls(OrderKind.ELIMINATION, block)

    def sort_key(self) -> Callable[[Monomial], SortKey]:
        """Return the key function of this order."""
        if self.kind is OrderKind.DEGREVLEX:
            return _degrevlex_key
        if self.kind is OrderKind.LEX:
            return _lex_key
        k = self.block

        def elimination_key(exps: Monomial) -> SortKey:
            return _degrevlex_key(exps[:k]) + _degrevlex_key(exps[k:])

        return elimination_key

    def __str__(self) -> str:
        if self.kind is OrderKind.ELIMINATION:
            return f"elimination({self.block})"
        return str(self.kind)
