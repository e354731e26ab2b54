"""Run configuration value object shared by every command."""

from dataclasses import dataclass

from sympy import isprime

from app.domain.enums import FieldKind, OutputFormat
from app.domain.errors import ValidationError
from app.domain.value_objects.field import CoefficientField


@dataclass(frozen=True)
class RunConfig:
    """Field, seed and bounds of one command run; echoed in every report.

    Args:
        field: Coefficient field choice.
        prime: Characteristic used when ``field`` is ``fp`` and for modular rank checks.
        seed: Seed of the random points.
        max_steps: Step bound for minimal resolutions.
        output_format: Report rendering.
        rank_points: Random points per exactness check.

    Raises:
        ValidationError: If the prime is not prime, the seed is negative,
            the step bound is below 1 or fewer than 3 points are asked for.
    """

    field: FieldKind = FieldKind.FP
    prime: int = 32003
    seed: int = 20201
    max_steps: int = 8
    output_format: OutputFormat = OutputFormat.JSON
    rank_points: int = 3

    def __post_init__(self) -> None:
        if not isprime(self.prime):
            raise ValidationError(f"p = {self.prime} is not prime")
        if self.seed < 0:
            raise ValidationError("Seed cannot be negative")
        if self.max_steps < 1:
            raise ValidationError("Step bound must be at least 1")
        if self.rank_points < 3:
            raise ValidationError("At least 3 random points are needed")

    @property
    def coefficient_field(self) -> CoefficientField:
        if self.field is FieldKind.QQ:
            return CoefficientField.rationals()
        return CoefficientField.prime(self.prime)

