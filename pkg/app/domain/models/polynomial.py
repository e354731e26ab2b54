"""Sparse multivariate polynomials with exact coefficients."""

import re
from collections.abc import Callable, Iterator, Mapping, Sequence
from fractions import Fraction
from operator import add

from app.domain.errors import ParseError, RingMismatchError, ValidationError
from app.domain.models.ring import AmbientRing
from app.domain.value_objects.field import Coefficient
from app.domain.value_objects.monomial import Monomial, unit_vector

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(.))")
_INDEXED = re.compile(r"x(\d+)$")


class Polynomial:
    """An element of ``ring``: a map from exponent vectors to nonzero coefficients.

    Instances are immutable. Two equal polynomials have identical term maps.

    Args:
        ring: The ambient ring.
        terms: Exponent vector to coefficient; coefficients are converted into the
            ring's field and zeros are dropped.

    Raises:
        ValidationError: If an exponent vector has the wrong length or a negative entry.
    """

    __slots__ = ("_lead", "_terms", "ring")

    def __init__(
        self, ring: AmbientRing, terms: Mapping[Monomial, int | Fraction] | None = None
    ) -> None:
        self.ring = ring
        self._lead: Monomial | None = None
        field = ring.coefficient_field
        clean: dict[Monomial, Coefficient] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != ring.nvars or any(e < 0 for e in exps):
                raise ValidationError(f"Bad exponent vector {exps} for ring {ring.name}")
            value = field.add(clean.get(exps, field.convert(0)), field.convert(c))
            if value:
                clean[tuple(exps)] = value
            else:
                clean.pop(tuple(exps), None)
        self._terms = clean

    @classmethod
    def from_terms(cls, ring: AmbientRing, terms: dict[Monomial, Coefficient]) -> "Polynomial":
        """Wrap an already canonical term map without copying or converting."""
        poly = cls.__new__(cls)
        poly.ring = ring
        poly._lead = None
        poly._terms = terms
        return poly

    # --- Constructors ---

    @classmethod
    def zero(cls, ring: AmbientRing) -> "Polynomial":
        return cls.from_terms(ring, {})

    @classmethod
    def constant(cls, ring: AmbientRing, value: int | Fraction) -> "Polynomial":
        return cls(ring, {(0,) * ring.nvars: value})

    @classmethod
    def variable(cls, ring: AmbientRing, name: str) -> "Polynomial":
        return cls(ring, {unit_vector(ring.nvars, ring.index(name)): 1})

    @classmethod
    def monomial(
        cls, ring: AmbientRing, exps: Monomial, coefficient: int | Fraction = 1
    ) -> "Polynomial":
        return cls(ring, {exps: coefficient})

    @classmethod
    def parse(cls, text: str, ring: AmbientRing, *, indexed: bool = False) -> "Polynomial":
        """Parse ``coeff*var^e*...`` terms joined by ``+`` and ``-``.

        Args:
            text: Polynomial text; integer or ``p/q`` coefficients, no parentheses.
            ring: Ring whose variables the text names.
            indexed: When True, ``x<i>`` names the i-th variable of ``ring`` (1-based).

        Raises:
            ParseError: On unknown variables, stray characters or malformed terms.
        """
        resolve = _indexed_resolver(ring) if indexed else _name_resolver(ring)
        terms: dict[Monomial, Fraction] = {}
        tokens = _tokenize(text)
        if not tokens:
            raise ParseError("Empty polynomial text")
        pos = 0
        while pos < len(tokens):
            sign = 1
            kind, value = tokens[pos]
            if kind == "op" and value in "+-":
                sign = -1 if value == "-" else 1
                pos += 1
            elif pos > 0:
                raise ParseError(f"Expected + or - before {value!r} in {text!r}")
            coeff = Fraction(sign)
            exps = [0] * ring.nvars
            expect_factor = True
            while pos < len(tokens):
                kind, value = tokens[pos]
                if kind == "op" and value in "+-":
                    break
                if kind == "op" and value == "*":
                    if expect_factor:
                        raise ParseError(f"Misplaced * in {text!r}")
                    expect_factor = True
                    pos += 1
                    continue
                if not expect_factor:
                    raise ParseError(f"Missing * before {value!r} in {text!r}")
                if kind == "num":
                    coeff *= Fraction(value)
                    pos += 1
                elif kind == "var":
                    index = resolve(value)
                    power = 1
                    pos += 1
                    if pos < len(tokens) and tokens[pos] == ("op", "^"):
                        exponent = tokens[pos + 1] if pos + 1 < len(tokens) else ("op", "")
                        if exponent[0] != "num" or "/" in exponent[1]:
                            raise ParseError(f"Bad exponent in {text!r}")
                        power = int(exponent[1])
                        pos += 2
                    exps[index] += power
                else:
                    raise ParseError(f"Unexpected {value!r} in {text!r}")
                expect_factor = False
            if expect_factor:
                raise ParseError(f"Dangling operator in {text!r}")
            key = tuple(exps)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return cls(ring, terms)

    # --- Queries ---

    @property
    def terms(self) -> Mapping[Monomial, Coefficient]:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(not any(exps) for exps in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Coefficient]]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> list[tuple[Monomial, Coefficient]]:
        """Terms in descending monomial order."""
        key = self.ring.order.sort_key()
        return sorted(self._terms.items(), key=lambda item: key(item[0]))

    @property
    def leading_monomial(self) -> Monomial:
        """Largest monomial under the ring's order.

        Raises:
            ValidationError: For the zero polynomial.
        """
        if self._lead is None:
            if not self._terms:
                raise ValidationError("The zero polynomial has no leading monomial")
            self._lead = min(self._terms, key=self.ring.order.sort_key())
        return self._lead

    @property
    def leading_coefficient(self) -> Coefficient:
        return self._terms[self.leading_monomial]

    @property
    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for zero."""
        return max((sum(exps) for exps in self._terms), default=-1)

    @property
    def homogeneous_degree(self) -> int | None:
        """Common degree of all terms, or None if inhomogeneous or zero."""
        degrees = {sum(exps) for exps in self._terms}
        return degrees.pop() if len(degrees) == 1 else None

    def support(self) -> frozenset[int]:
        """Indices of the variables that occur."""
        return frozenset(i for exps in self._terms for i, e in enumerate(exps) if e)

    def variables_used(self) -> tuple[str, ...]:
        used = self.support()
        return tuple(v for i, v in enumerate(self.ring.variables) if i in used)

    # --- Arithmetic ---

    def _check(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(f"Ring {self.ring.name} does not match {other.ring.name}")

    def _coerce(self, other: "Polynomial | int | Fraction") -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.ring, other)

    def __add__(self, other: "Polynomial | int | Fraction") -> "Polynomial":
        other = self._coerce(other)
        field = self.ring.coefficient_field
        out = dict(self._terms)
        for exps, c in other._terms.items():
            value = field.add(out[exps], c) if exps in out else c
            if value:
                out[exps] = value
            else:
                del out[exps]
        return Polynomial.from_terms(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        field = self.ring.coefficient_field
        return Polynomial.from_terms(self.ring, {e: field.neg(c) for e, c in self._terms.items()})

    def __sub__(self, other: "Polynomial | int | Fraction") -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "Polynomial | int | Fraction") -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: "Polynomial | int | Fraction") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scalar_mul(other)
        self._check(other)
        field = self.ring.coefficient_field
        out: dict[Monomial, Coefficient] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exps = tuple(map(add, ea, eb))
                c = field.mul(ca, cb)
                if exps in out:
                    c = field.add(out[exps], c)
                    if c:
                        out[exps] = c
                    else:
                        del out[exps]
                else:
                    out[exps] = c
        return Polynomial.from_terms(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValidationError("Negative powers are not polynomials")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scalar_mul(self, scalar: int | Fraction | Coefficient) -> "Polynomial":
        field = self.ring.coefficient_field
        s = field.convert(scalar)
        if not s:
            return Polynomial.zero(self.ring)
        return Polynomial.from_terms(
            self.ring, {e: field.mul(c, s) for e, c in self._terms.items()}
        )

    def monomial_mul(self, exps: Monomial, coefficient: Coefficient | None = None) -> "Polynomial":
        """Multiply by ``coefficient * x^exps`` (coefficient already in the field)."""
        field = self.ring.coefficient_field
        s = field.one if coefficient is None else coefficient
        return Polynomial.from_terms(
            self.ring, {tuple(map(add, e, exps)): field.mul(c, s) for e, c in self._terms.items()}
        )

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scalar_mul(self.ring.coefficient_field.inv(self.leading_coefficient))

    def divide_exact(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of an exact division.

        Raises:
            ValidationError: If ``divisor`` is zero or does not divide this polynomial.
        """
        self._check(divisor)
        if divisor.is_zero:
            raise ValidationError("Division by the zero polynomial")
        field = self.ring.coefficient_field
        lead = divisor.leading_monomial
        lead_inv = field.inv(divisor.leading_coefficient)
        remainder = self
        quotient: dict[Monomial, Coefficient] = {}
        while not remainder.is_zero:
            top = remainder.leading_monomial
            shift = tuple(a - b for a, b in zip(top, lead, strict=True))
            if any(e < 0 for e in shift):
                raise ValidationError(f"{divisor} does not divide {self}")
            c = field.mul(remainder.leading_coefficient, lead_inv)
            quotient[shift] = c
            remainder = remainder - divisor.monomial_mul(shift, c)
        return Polynomial.from_terms(self.ring, quotient)

    # --- Calculus and evaluation ---

    def partial_derivative(self, variable: str | int) -> "Polynomial":
        """Formal partial derivative.

        Raises:
            NotFoundError: If the variable is not in the ring.
        """
        i = self.ring.index(variable) if isinstance(variable, str) else variable
        if not 0 <= i < self.ring.nvars:
            raise ValidationError(f"Variable index {i} out of range")
        field = self.ring.coefficient_field
        out: dict[Monomial, Coefficient] = {}
        for exps, c in self._terms.items():
            e = exps[i]
            if e == 0:
                continue
            value = field.mul(c, field.convert(e))
            if value:
                lowered = exps[:i] + (e - 1,) + exps[i + 1 :]
                out[lowered] = value
        return Polynomial.from_terms(self.ring, out)

    def evaluate(self, point: Sequence[Coefficient]) -> Coefficient:
        """Value at a point given as one field element per variable.

        Raises:
            ValidationError: If the point has the wrong dimension.
        """
        if len(point) != self.ring.nvars:
            raise ValidationError(f"Point has {len(point)} coordinates, ring has {self.ring.nvars}")
        field = self.ring.coefficient_field
        values = [field.convert(v) for v in point]
        total = field.convert(0)
        for exps, c in self._terms.items():
            term = c
            for v, e in zip(values, exps, strict=True):
                if e:
                    term = field.mul(term, v if e == 1 else field.power(v, e))
            total = field.add(total, term)
        return total

    def evaluate_modular(self, point: Sequence[int], p: int) -> int:
        """Value in F_p at an F_p point, reducing rational coefficients first."""
        field = self.ring.coefficient_field
        total = 0
        for exps, c in self._terms.items():
            term = field.to_modular(c, p)
            for v, e in zip(point, exps, strict=True):
                if e:
                    term = term * pow(v, e, p) % p
            total += term
        return total % p

    # --- Ring changes ---

    def map_into(self, ring: AmbientRing, positions: Sequence[int | None]) -> "Polynomial":
        """Send variable i to variable ``positions[i]`` of ``ring``.

        A ``None`` position marks a variable that must not occur.

        Raises:
            ValidationError: If a dropped variable occurs.
        """
        field = ring.coefficient_field
        out: dict[Monomial, Coefficient] = {}
        for exps, c in self._terms.items():
            target = [0] * ring.nvars
            for i, e in enumerate(exps):
                if e:
                    j = positions[i]
                    if j is None:
                        raise ValidationError(
                            f"Variable {self.ring.variables[i]} does not exist in ring {ring.name}"
                        )
                    target[j] += e
            key = tuple(target)
            value = c if ring.coefficient_field == self.ring.coefficient_field else field.convert(c)
            value = field.add(out[key], value) if key in out else value
            if value:
                out[key] = value
            else:
                out.pop(key, None)
        return Polynomial.from_terms(ring, out)

    def relabel(self, ring: AmbientRing) -> "Polynomial":
        """Same exponent vectors in another ring with as many variables."""
        if ring.nvars != self.ring.nvars:
            raise ValidationError(f"Cannot relabel {self.ring.nvars} variables as {ring.nvars}")
        return self.map_into(ring, list(range(ring.nvars)))

    def by_name(self, ring: AmbientRing) -> "Polynomial":
        """Move into ``ring`` matching variables by name (restriction or extension)."""
        positions = [ring.index(v) if ring.has_variable(v) else None for v in self.ring.variables]
        return self.map_into(ring, positions)

    restrict = by_name
    extend = by_name

    def with_order(self, ring: AmbientRing) -> "Polynomial":
        """Reinterpret in a ring that differs only in its monomial order or field."""
        if ring.variables != self.ring.variables:
            raise RingMismatchError(f"Ring {ring.name} has different variables")
        if ring.coefficient_field == self.ring.coefficient_field:
            return Polynomial.from_terms(ring, self._terms)
        return self.map_into(ring, list(range(ring.nvars)))

    def specialize(self, values: Mapping[str, int | Fraction]) -> "Polynomial":
        """Substitute constants for the named variables (they stay in the ring)."""
        field = self.ring.coefficient_field
        subs = {self.ring.index(v): field.convert(c) for v, c in values.items()}
        out: dict[Monomial, Coefficient] = {}
        for exps, c in self._terms.items():
            value = c
            new = list(exps)
            for i, s in subs.items():
                if exps[i]:
                    value = field.mul(value, field.power(s, exps[i]))
                    new[i] = 0
            if not value:
                continue
            key = tuple(new)
            value = field.add(out[key], value) if key in out else value
            if value:
                out[key] = value
            else:
                out.pop(key, None)
        return Polynomial.from_terms(self.ring, out)

    def drop_terms_with(self, variables: Sequence[str]) -> "Polynomial":
        """Remove every term that involves one of ``variables``."""
        indices = [self.ring.index(v) for v in variables]
        return Polynomial.from_terms(
            self.ring,
            {e: c for e, c in self._terms.items() if not any(e[i] for i in indices)},
        )

    # --- Text ---

    def to_text(self) -> str:
        """Canonical text, terms in descending order: ``x1*x18*x27 - x1*x19*x26``."""
        if not self._terms:
            return "0"
        field = self.ring.coefficient_field
        pieces: list[str] = []
        for exps, c in self.sorted_terms():
            text = field.to_text(c)
            negative = text.startswith("-")
            magnitude = text.lstrip("-")
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.variables, exps, strict=True)
                if e
            ]
            if not factors:
                body = magnitude
            elif magnitude == "1":
                body = "*".join(factors)
            else:
                body = "*".join([magnitude, *factors])
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.ring.name}: {self.to_text()})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, int | Fraction):
            return self == Polynomial.constant(self.ring, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring.name, frozenset(self._terms.items())))


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if match is None:
            raise ParseError(f"Cannot tokenize {text!r}")
        number, name, other = match.groups()
        if number is not None:
            tokens.append(("num", number))
        elif name is not None:
            tokens.append(("var", name))
        elif other in {"+", "-", "*", "^"}:
            tokens.append(("op", other))
        else:
            raise ParseError(f"Unexpected character {other!r} in {text!r}")
        pos = match.end()
    return tokens


def _name_resolver(ring: AmbientRing) -> Callable[[str], int]:
    def resolve(name: str) -> int:
        if not ring.has_variable(name):
            raise ParseError(f"Unknown variable {name} for ring {ring.name}")
        return ring.index(name)

    return resolve


def _indexed_resolver(ring: AmbientRing) -> Callable[[str], int]:
    def resolve(name: str) -> int:
        match = _INDEXED.match(name)
        if match is None or not 1 <= int(match.group(1)) <= ring.nvars:
            raise ParseError(f"{name} is not an indexed variable of ring {ring.name}")
        return int(match.group(1)) - 1

    return resolve
