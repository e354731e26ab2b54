"""Hilbert series data of a quotient ring R/I."""

from dataclasses import dataclass

from app.domain.errors import ValidationError
from app.domain.value_objects.t_polynomial import TPolynomial


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series of R/I written as ``k_numerator / (1 - T)^nvars``.

    Attributes:
        k_numerator: Numerator over ``(1 - T)^nvars``.
        nvars: Number of variables of the ambient ring.
        dim: Krull dimension of R/I.
        codim: ``nvars - dim``.
        h_vector: ``k_numerator / (1 - T)^codim``; its value at 1 is the degree.

    Raises:
        ValidationError: If the fields are not consistent with each other.
    """

    k_numerator: TPolynomial
    nvars: int
    dim: int
    codim: int
    h_vector: TPolynomial

    def __post_init__(self) -> None:
        if self.codim + self.dim != self.nvars:
            raise ValidationError(
                f"codim {self.codim} + dim {self.dim} differs from {self.nvars} variables"
            )
        if self.h_vector * TPolynomial.one_minus_t_power(self.codim) != self.k_numerator:
            raise ValidationError("k_numerator is not h_vector * (1-T)^codim")
        if self.h_vector.value_at_one() <= 0:
            raise ValidationError(f"h-vector {self.h_vector} has non-positive degree")

    @property
    def degree(self) -> int:
        return self.h_vector.value_at_one()

    @property
    def is_palindromic(self) -> bool:
        return self.h_vector.is_palindromic()
