"""Hilbert series of quotient rings via the pivot recursion on the initial ideal."""

import logging
from collections.abc import Iterable, Sequence
from functools import lru_cache
from math import comb

from app.domain.errors import PreconditionError, ValidationError
from app.domain.models.hilbert_data import HilbertData
from app.domain.models.ideal import Ideal, MonomialIdeal
from app.domain.services.groebner import leading_term_ideal, monomial_dimension
from app.domain.value_objects.monomial import Monomial, coprime, unit_vector
from app.domain.value_objects.t_polynomial import TPolynomial

logger = logging.getLogger(__name__)


def _minimalize(nvars: int, monomials: Iterable[Monomial]) -> tuple[Monomial, ...]:
    return MonomialIdeal.from_monomials(nvars, monomials).generators


def _pairwise_coprime(gens: Sequence[Monomial]) -> bool:
    return all(coprime(a, b) for i, a in enumerate(gens) for b in gens[i + 1 :])


def _pivot_variable(gens: Sequence[Monomial]) -> int:
    """Variable occurring in the most generators; the lowest index wins ties."""
    counts = [sum(1 for g in gens if g[i]) for i in range(len(gens[0]))]
    return max(range(len(counts)), key=lambda i: (counts[i], -i))


@lru_cache(maxsize=1 << 16)
def _numerator(gens: tuple[Monomial, ...]) -> TPolynomial:
    if not gens:
        return TPolynomial.one()
    if _pairwise_coprime(gens):
        result = TPolynomial.one()
        for g in gens:
            result = result - result.shift(sum(g))
        return result
    nvars = len(gens[0])
    v = _pivot_variable(gens)
    # K(I) = K(I + (x)) + T * K(I : x)
    added = _minimalize(nvars, [*(g for g in gens if not g[v]), unit_vector(nvars, v)])
    quotient = _minimalize(
        nvars, (g[:v] + (g[v] - 1,) + g[v + 1 :] if g[v] else g for g in gens)
    )
    return _numerator(added) + _numerator(quotient).shift(1)


def hilbert_numerator(ideal: MonomialIdeal) -> TPolynomial:
    """Numerator K of the Hilbert series ``K(T) / (1 - T)^n`` of R/ideal."""
    return _numerator(ideal.generators)


def hilbert_series(ideal: Ideal) -> HilbertData:
    """Hilbert data of R/I computed from the leading-term ideal.

    Raises:
        PreconditionError: If I is the unit ideal.
    """
    lt = leading_term_ideal(ideal)
    if lt.is_unit:
        raise PreconditionError(f"{ideal.name or 'ideal'} is the unit ideal")
    k = hilbert_numerator(lt)
    dim = monomial_dimension(lt)
    codim = ideal.ring.nvars - dim
    h = k
    for _ in range(codim):
        h = h.divide_one_minus_t()
    logger.debug("hilbert_series %s: dim %d, h %s", ideal.name, dim, h)
    return HilbertData(k_numerator=k, nvars=ideal.ring.nvars, dim=dim, codim=codim, h_vector=h)


@lru_cache(maxsize=1 << 16)
def _count_standard(gens: tuple[Monomial, ...], nvars: int, d: int) -> int:
    if any(not any(g) for g in gens):
        return 0
    if not gens:
        return comb(d + nvars - 1, nvars - 1) if nvars else int(d == 0)
    total = 0
    for e in range(d + 1):
        rest = _minimalize(nvars - 1, (g[1:] for g in gens if g[0] <= e))
        total += _count_standard(rest, nvars - 1, d - e)
    return total


def hilbert_function_prefix(ideal: Ideal, d_max: int) -> list[int]:
    """``dim_k (R/I)_d`` for ``d = 0..d_max`` by counting standard monomials.

    Raises:
        ValidationError: If ``d_max`` is negative.
    """
    if d_max < 0:
        raise ValidationError("d_max must be non-negative")
    lt = leading_term_ideal(ideal)
    return [_count_standard(lt.generators, lt.nvars, d) for d in range(d_max + 1)]


def is_palindromic(h: TPolynomial) -> bool:
    return h.is_palindromic()


def complete_intersection_h(degrees: Iterable[int]) -> TPolynomial:
    """h-vector ``prod (1 + T + ... + T^(d-1))`` of a complete intersection."""
    result = TPolynomial.one()
    for d in degrees:
        result = result * TPolynomial((1,) * d)
    return result
