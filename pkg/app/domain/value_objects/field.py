"""Coefficient fields: the rationals and prime fields F_p."""

import random
from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime

from app.domain.errors import ValidationError

Coefficient = int | Fraction


@dataclass(frozen=True)
class CoefficientField:
    """Exact coefficient field.

    Characteristic 0 is the rationals, with ``Fraction`` coefficients.
    A prime characteristic p is F_p, with ``int`` coefficients in ``[0, p)``.

    Args:
        characteristic: 0 or a prime.

    Raises:
        ValidationError: If the characteristic is neither 0 nor prime.
    """

    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.characteristic < 0:
            raise ValidationError("Characteristic cannot be negative")
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise ValidationError(f"Characteristic {self.characteristic} is not prime")

    @classmethod
    def rationals(cls) -> "CoefficientField":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "CoefficientField":
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def name(self) -> str:
        """Short label used in reports: ``QQ`` or ``F_p``."""
        return "QQ" if self.is_rational else f"F_{self.characteristic}"

    @property
    def one(self) -> Coefficient:
        return Fraction(1) if self.is_rational else 1

    def convert(self, value: int | Fraction) -> Coefficient:
        """Map an integer or rational number into the field.

        Raises:
            ValidationError: If a denominator vanishes modulo p.
        """
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ValidationError(f"Denominator {value.denominator} vanishes in F_{p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        return value % p

    def add(self, a: Coefficient, b: Coefficient) -> Coefficient:
        p = self.characteristic
        return a + b if p == 0 else (a + b) % p

    def sub(self, a: Coefficient, b: Coefficient) -> Coefficient:
        p = self.characteristic
        return a - b if p == 0 else (a - b) % p

    def mul(self, a: Coefficient, b: Coefficient) -> Coefficient:
        p = self.characteristic
        return a * b if p == 0 else (a * b) % p

    def neg(self, a: Coefficient) -> Coefficient:
        p = self.characteristic
        return -a if p == 0 else (-a) % p

    def inv(self, a: Coefficient) -> Coefficient:
        """Multiplicative inverse.

        Raises:
            ValidationError: If ``a`` is zero.
        """
        if a == 0:
            raise ValidationError("Zero has no inverse")
        p = self.characteristic
        return 1 / Fraction(a) if p == 0 else pow(int(a), -1, p)

    def div(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return self.mul(a, self.inv(b))

    def random_element(self, rng: random.Random, *, bound: int = 100) -> Coefficient:
        """Draw a random element; over the rationals an integer in ``[-bound, bound]``."""
        if self.is_rational:
            return Fraction(rng.randint(-bound, bound))
        return rng.randrange(self.characteristic)

    def to_text(self, a: Coefficient) -> str:
        """Canonical text; F_p elements print as symmetric representatives."""
        p = self.characteristic
        if p == 0:
            return str(a)
        value = int(a)
        return str(value - p if value > p // 2 else value)

    def to_modular(self, a: Coefficient, p: int) -> int:
        """Reduce a coefficient of this field into F_p.

        Raises:
            ValidationError: If the field is a different prime field or a denominator vanishes.
        """
        if self.characteristic == p:
            return int(a)
        if not self.is_rational:
            raise ValidationError(f"Cannot reduce {self.name} coefficients modulo {p}")
        frac = Fraction(a)
        if frac.denominator % p == 0:
            raise ValidationError(f"Denominator {frac.denominator} vanishes in F_{p}")
        return frac.numerator * pow(frac.denominator, -1, p) % p

    def power(self, a: Coefficient, e: int) -> Coefficient:
        p = self.characteristic
        return a**e if p == 0 else pow(int(a), e, p)
