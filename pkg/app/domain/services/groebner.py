"""Ideal operations on top of the Buchberger engine: bases, membership, elimination, colons."""

import logging
from collections.abc import Iterable, Sequence

from app.domain.errors import PreconditionError, RingMismatchError
from app.domain.models.ideal import Ideal, MonomialIdeal
from app.domain.models.polynomial import Polynomial
from app.domain.models.ring import AmbientRing
from app.domain.services.buchberger import Buchberger
from app.domain.value_objects.field import CoefficientField
from app.domain.value_objects.monomial import support
from app.domain.value_objects.monomial_order import MonomialOrder

logger = logging.getLogger(__name__)

TAG_VARIABLE = "_t"


def _check_same_ring(a: Ideal, b: Ideal) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"Ring {a.ring.name} does not match {b.ring.name}")


def _engine(ring: AmbientRing) -> Buchberger:
    return Buchberger(ring.coefficient_field, ring.order.sort_key())


# --- Gröbner bases and reduction ---


def groebner_basis(ideal: Ideal, order: MonomialOrder | None = None) -> tuple[Polynomial, ...]:
    """Reduced Gröbner basis of ``ideal``.

    The result is cached on the ideal per order. Basis elements live in the
    ideal's ring re-ordered by ``order`` and are sorted by descending leading
    monomial, so the output does not depend on the generator order.

    Args:
        ideal: The ideal.
        order: Monomial order; defaults to the ring's order.

    Returns:
        The monic, interreduced basis. Empty for the zero ideal.
    """
    order = order or ideal.ring.order
    cached = ideal.cached_basis(order)
    if cached is not None:
        return cached
    ring = ideal.ring if order == ideal.ring.order else ideal.ring.with_order(order)
    engine = _engine(ring)
    for g in sorted(ideal.generators, key=lambda p: (p.total_degree, len(p))):
        engine.add(dict(g.terms))
    engine.run()
    basis = tuple(Polynomial.from_terms(ring, t) for t in engine.reduced_basis())
    logger.debug(
        "groebner_basis %s: %d generators -> %d elements, %d reductions to zero",
        ideal.name or ideal.ring.name,
        len(ideal.generators),
        len(basis),
        engine.reductions_to_zero,
    )
    ideal.store_basis(order, basis)
    return ideal.cached_basis(order) or basis


def normal_form(f: Polynomial, ideal: Ideal, order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of ``f`` modulo the Gröbner basis of ``ideal``; zero iff f lies in the ideal.

    Raises:
        RingMismatchError: If ``f`` is not in the ideal's ring.
    """
    if f.ring != ideal.ring:
        raise RingMismatchError(f"Polynomial ring {f.ring.name} does not match {ideal.ring.name}")
    basis = groebner_basis(ideal, order)
    ring = basis[0].ring if basis else ideal.ring
    engine = Buchberger(ring.coefficient_field, ring.order.sort_key())
    engine.load(dict(g.terms) for g in basis)
    return Polynomial.from_terms(ideal.ring, engine.reduce(dict(f.terms)))


def contains(ideal: Ideal, f: Polynomial) -> bool:
    return normal_form(f, ideal).is_zero


def contains_ideal(big: Ideal, small: Ideal) -> bool:
    """True if every generator of ``small`` lies in ``big``."""
    _check_same_ring(big, small)
    return all(contains(big, g) for g in small.generators)


def ideals_equal(a: Ideal, b: Ideal) -> bool:
    """Equality as ideals, by mutual normal-form reduction."""
    return contains_ideal(a, b) and contains_ideal(b, a)


def is_unit(ideal: Ideal) -> bool:
    return any(g.is_constant for g in groebner_basis(ideal))


def unit_ideal(ring: AmbientRing) -> Ideal:
    return Ideal(ring, (Polynomial.constant(ring, 1),), "(1)")


def leading_term_ideal(ideal: Ideal, order: MonomialOrder | None = None) -> MonomialIdeal:
    """Minimal generators of the initial ideal."""
    basis = groebner_basis(ideal, order)
    return MonomialIdeal.from_monomials(ideal.ring.nvars, (g.leading_monomial for g in basis))


def over_field(ideal: Ideal, coefficient_field: CoefficientField) -> Ideal:
    """The ideal generated by the same polynomials over another coefficient field."""
    ring = ideal.ring.with_field(coefficient_field)
    gens = (g.with_order(ring) for g in ideal.generators)
    return Ideal(ring, tuple(g for g in gens if not g.is_zero), ideal.name)


# --- Elimination, intersection, colon ---


def eliminate(
    ideal: Ideal, variables: Iterable[str], target: AmbientRing | None = None
) -> Ideal:
    """Generators of the ideal intersected with the subring of the remaining variables.

    Args:
        ideal: The ideal.
        variables: Names of the variables to remove.
        target: Ring receiving the result; must contain every remaining variable that
            occurs. Defaults to the subring of the remaining variables.

    Returns:
        The elimination ideal, generated by a Gröbner basis.
    """
    ring = ideal.ring
    removed_set = set(variables)
    for v in removed_set:
        ring.index(v)
    removed = tuple(v for v in ring.variables if v in removed_set)
    remaining = tuple(v for v in ring.variables if v not in removed_set)
    target = target or ring.subring(remaining, name=f"{ring.name}|{len(remaining)}")
    if not removed:
        return Ideal(target, tuple(g.by_name(target) for g in ideal.generators), ideal.name)

    block = len(removed)
    elim_ring = AmbientRing(
        f"{ring.name}|elim",
        removed + remaining,
        ring.coefficient_field,
        MonomialOrder.elimination(block),
    )
    lifted = Ideal(elim_ring, tuple(g.by_name(elim_ring) for g in ideal.generators))
    basis = groebner_basis(lifted)
    kept = [g for g in basis if not any(e for m in g.terms for e in m[:block])]
    logger.debug("eliminate %s: %d of %d basis elements survive", removed, len(kept), len(basis))
    return Ideal(target, tuple(g.by_name(target) for g in kept), ideal.name)


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """``a ∩ b`` by eliminating t from ``t·a + (1 - t)·b``.

    Raises:
        RingMismatchError: If the ideals live in different rings.
    """
    _check_same_ring(a, b)
    ring = a.ring
    if a.is_zero or b.is_zero:
        return Ideal(ring, ())
    ext = ring.extended((TAG_VARIABLE,))
    t = Polynomial.variable(ext, TAG_VARIABLE)
    gens = [t * g.by_name(ext) for g in a.generators]
    gens += [(1 - t) * g.by_name(ext) for g in b.generators]
    return eliminate(Ideal(ext, tuple(gens)), (TAG_VARIABLE,), target=ring)


def product(a: Ideal, b: Ideal) -> Ideal:
    _check_same_ring(a, b)
    return Ideal(a.ring, tuple(f * g for f in a.generators for g in b.generators))


def colon(a: Ideal, b: Ideal) -> Ideal:
    """The colon ideal ``a : b``, intersecting ``(a ∩ (g)) / g`` over the generators g of b.

    Raises:
        RingMismatchError: If the ideals live in different rings.
        PreconditionError: If ``b`` is the zero ideal.
    """
    _check_same_ring(a, b)
    if b.is_zero:
        raise PreconditionError("Colon by the zero ideal")
    ring = a.ring
    result: Ideal | None = None
    for g in b.generators:
        if contains(a, g):
            continue
        inter = intersect(a, Ideal(ring, (g,)))
        quotient = Ideal(ring, tuple(h.divide_exact(g) for h in inter.generators))
        result = quotient if result is None else intersect(result, quotient)
    if result is None:
        return unit_ideal(ring)
    return Ideal(ring, groebner_basis(result), f"{a.name}:{b.name}" if a.name else "")


# --- Dimension ---


def _packing_bound(edges: Sequence[frozenset[int]]) -> int:
    used: set[int] = set()
    count = 0
    for e in sorted(edges, key=len):
        if used.isdisjoint(e):
            used |= e
            count += 1
    return count


def _greedy_cover(edges: Sequence[frozenset[int]]) -> int:
    remaining = list(edges)
    size = 0
    while remaining:
        counts: dict[int, int] = {}
        for e in remaining:
            for v in e:
                counts[v] = counts.get(v, 0) + 1
        best = max(sorted(counts), key=lambda v: counts[v])
        remaining = [e for e in remaining if best not in e]
        size += 1
    return size


def minimum_hitting_set_size(edges: Iterable[frozenset[int]]) -> int:
    """Size of the smallest vertex set meeting every edge (branch and bound)."""
    minimal: list[frozenset[int]] = []
    for e in sorted(set(edges), key=len):
        if not any(m <= e for m in minimal):
            minimal.append(e)
    best = _greedy_cover(minimal)

    def search(open_edges: list[frozenset[int]], chosen: int) -> None:
        nonlocal best
        if not open_edges:
            best = min(best, chosen)
            return
        if chosen + _packing_bound(open_edges) >= best:
            return
        smallest = min(open_edges, key=len)
        for v in sorted(smallest):
            search([e for e in open_edges if v not in e], chosen + 1)

    search(minimal, 0)
    return best


def monomial_dimension(ideal: MonomialIdeal) -> int:
    """Krull dimension of the quotient by a monomial ideal; -1 for the unit ideal.

    The dimension is the size of the largest variable set containing no generator's
    support, that is ``n`` minus a minimum hitting set of the supports.
    """
    if ideal.is_unit:
        return -1
    if ideal.is_zero:
        return ideal.nvars
    return ideal.nvars - minimum_hitting_set_size(support(m) for m in ideal.generators)


def krull_dimension(ideal: Ideal) -> int:
    """Dimension of R/I from its leading-term ideal."""
    return monomial_dimension(leading_term_ideal(ideal))
