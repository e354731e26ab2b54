"""Integer polynomials in one variable T (Hilbert numerators, h-vectors)."""

import re
from dataclasses import dataclass

from app.domain.errors import ParseError, ValidationError

_TERM = re.compile(r"([+-]?)(\d*)(\*?T(?:\^(\d+))?)?")


def _strip(coefficients: tuple[int, ...]) -> tuple[int, ...]:
    end = len(coefficients)
    while end and coefficients[end - 1] == 0:
        end -= 1
    return coefficients[:end]


@dataclass(frozen=True)
class TPolynomial:
    """Polynomial with integer coefficients, lowest degree first.

    The zero polynomial has no coefficients; trailing zeros are never stored.

    Attributes:
        coefficients: Coefficient of T^i at position i.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _strip(tuple(self.coefficients)))

    @classmethod
    def one(cls) -> "TPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "TPolynomial":
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def one_minus_t_power(cls, k: int) -> "TPolynomial":
        """``(1 - T)^k``."""
        result = cls.one()
        step = cls((1, -1))
        for _ in range(k):
            result = result * step
        return result

    @classmethod
    def parse(cls, text: str) -> "TPolynomial":
        """Parse text such as ``1+3T+T^2`` or ``-T^3+1``.

        Raises:
            ParseError: If the text is not a sum of integer multiples of powers of T.
        """
        compact = text.replace(" ", "")
        if not compact:
            raise ParseError("Empty T-polynomial")
        coeffs: dict[int, int] = {}
        pos = 0
        while pos < len(compact):
            match = _TERM.match(compact, pos)
            if match is None or match.end() == pos or not (match.group(2) or match.group(3)):
                raise ParseError(f"Cannot parse T-polynomial {text!r}")
            sign = -1 if match.group(1) == "-" else 1
            if pos > 0 and not match.group(1):
                raise ParseError(f"Missing operator in {text!r}")
            value = int(match.group(2)) if match.group(2) else 1
            power = 0
            if match.group(3):
                power = int(match.group(4)) if match.group(4) else 1
            coeffs[power] = coeffs.get(power, 0) + sign * value
            pos = match.end()
        top = max(coeffs)
        return cls(tuple(coeffs.get(i, 0) for i in range(top + 1)))

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def value_at_one(self) -> int:
        return sum(self.coefficients)

    def __add__(self, other: "TPolynomial") -> "TPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return TPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    def __neg__(self) -> "TPolynomial":
        return TPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "TPolynomial") -> "TPolynomial":
        return self + (-other)

    def __mul__(self, other: "TPolynomial") -> "TPolynomial":
        if self.is_zero or other.is_zero:
            return TPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return TPolynomial(tuple(out))

    def shift(self, k: int) -> "TPolynomial":
        """Multiply by T^k."""
        if self.is_zero:
            return self
        return TPolynomial((0,) * k + self.coefficients)

    def divide_one_minus_t(self) -> "TPolynomial":
        """Exact division by ``1 - T``.

        Raises:
            ValidationError: If ``1 - T`` does not divide the polynomial.
        """
        if self.value_at_one() != 0:
            raise ValidationError(f"1-T does not divide {self}")
        # q_i = sum of the first i+1 coefficients
        out: list[int] = []
        running = 0
        for c in self.coefficients[:-1]:
            running += c
            out.append(running)
        return TPolynomial(tuple(out))

    def multiplicity_at_one(self) -> int:
        """Largest k such that ``(1 - T)^k`` divides the polynomial.

        Raises:
            ValidationError: For the zero polynomial.
        """
        if self.is_zero:
            raise ValidationError("The zero polynomial vanishes to every order")
        k = 0
        current = self
        while current.value_at_one() == 0:
            current = current.divide_one_minus_t()
            k += 1
        return k

    def is_palindromic(self) -> bool:
        return self.coefficients == tuple(reversed(self.coefficients))

    def series_prefix(self, nvars: int, d_max: int) -> list[int]:
        """Coefficients of ``self / (1 - T)^nvars`` up to degree ``d_max``."""
        # (1-T)^-n has coefficients C(d + n - 1, n - 1)
        base = [1] * (d_max + 1)
        if nvars == 0:
            base = [1] + [0] * d_max
        else:
            for _ in range(nvars - 1):
                for d in range(1, d_max + 1):
                    base[d] += base[d - 1]
        return [
            sum(self.coefficient(i) * base[d - i] for i in range(d + 1))
            for d in range(d_max + 1)
        ]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                power = "T" if i == 1 else f"T^{i}"
                body = power if abs(c) == 1 else f"{abs(c)}{power}"
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(f"{sign}{body}")
        return "".join(parts)
