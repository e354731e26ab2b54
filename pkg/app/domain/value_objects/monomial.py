"""Exponent-vector helpers shared by polynomials and monomial ideals."""

Monomial = tuple[int, ...]


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b, strict=True))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; the caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b, strict=True))


def product(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b, strict=True))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b, strict=True))


def support(m: Monomial) -> frozenset[int]:
    """Indices of the variables that occur in ``m``."""
    return frozenset(i for i, e in enumerate(m) if e)


def one(nvars: int) -> Monomial:
    return (0,) * nvars


def unit_vector(nvars: int, index: int) -> Monomial:
    return tuple(1 if i == index else 0 for i in range(nvars))
