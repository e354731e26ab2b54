"""Minimal graded free resolutions by iterated syzygies."""

import logging
from collections.abc import Callable, Sequence

from app.domain.errors import PreconditionError, StepBoundExceeded
from app.domain.models.complex import BettiTable, GradedFreeComplex
from app.domain.models.ideal import Ideal
from app.domain.models.matrix import PolyMatrix, Position
from app.domain.models.polynomial import Polynomial
from app.domain.models.ring import AmbientRing
from app.domain.services.buchberger import Buchberger, SortKey, Term, Terms
from app.domain.value_objects.field import Coefficient
from app.domain.value_objects.monomial import Monomial

logger = logging.getLogger(__name__)


def _module_key(weights: Sequence[int], split: int) -> Callable[[Term], SortKey]:
    """Order on ``(component, exps...)``: components below ``split`` beat all others.

    Inside a block, terms compare by weighted degree, then reverse
    lexicographically, then by component.
    """

    def key(t: Term) -> SortKey:
        comp, exps = t[0], t[1:]
        return (int(comp >= split), -(sum(exps) + weights[comp]), *reversed(exps), comp)

    return key


def _degree(terms: Terms, weights: Sequence[int]) -> int:
    t = next(iter(terms))
    return weights[t[0]] + sum(t[1:])


def _minimal_subset(
    ring: AmbientRing, candidates: Sequence[Terms], weights: Sequence[int]
) -> list[Terms]:
    """Minimal generators among homogeneous module elements, by degree-truncated bases.

    An element is kept when it does not reduce to zero modulo the basis of the
    kept elements of lower or equal degree.
    """
    engine = Buchberger(
        ring.coefficient_field,
        _module_key(weights, len(weights)),
        module=True,
        weights=tuple(weights),
    )
    chosen: list[Terms] = []
    for terms in sorted(candidates, key=lambda t: (_degree(t, weights), len(t))):
        engine.run(max_degree=_degree(terms, weights))
        if engine.add(terms) is not None:
            chosen.append(terms)
    return chosen


def _syzygies(
    ring: AmbientRing, generators: Sequence[Terms], weights: Sequence[int]
) -> tuple[list[Terms], list[int]]:
    """Generators of the syzygy module of ``generators`` inside ``⊕ R(-deg g_i)``.

    Each g_i is paired with the basis vector e_i in an augmented free module;
    basis elements without any g-part form a generating set of the syzygies.
    """
    r = len(weights)
    degrees = [_degree(g, weights) for g in generators]
    augmented_weights = (*weights, *degrees)
    engine = Buchberger(
        ring.coefficient_field,
        _module_key(augmented_weights, r),
        module=True,
        weights=augmented_weights,
    )
    one = ring.coefficient_field.one
    zero_exps = (0,) * ring.nvars
    for i, g in enumerate(generators):
        element = dict(g)
        element[(r + i, *zero_exps)] = one
        engine.add(element)
    engine.run()
    syzygies = []
    for terms in engine.reduced_basis():
        if min(t[0] for t in terms) >= r:
            syzygies.append({(t[0] - r, *t[1:]): c for t, c in terms.items()})
    logger.debug("syzygies: %d generators -> %d syzygies", len(generators), len(syzygies))
    return syzygies, degrees


def _to_matrix(ring: AmbientRing, columns: Sequence[Terms], rows: int) -> PolyMatrix:
    entries: dict[Position, dict[Monomial, Coefficient]] = {}
    for j, terms in enumerate(columns):
        for t, c in terms.items():
            entries.setdefault((t[0], j), {})[t[1:]] = c
    return PolyMatrix(
        ring,
        (rows, len(columns)),
        {pos: Polynomial.from_terms(ring, v) for pos, v in entries.items()},
    )


def minimal_resolution(ideal: Ideal, max_steps: int) -> GradedFreeComplex:
    """Minimal graded free resolution of R/I over the subring of the variables I uses.

    At each step the syzygies of the current minimal generators are computed
    from an augmented module Gröbner basis and thinned to a minimal generating set.

    Args:
        ideal: A homogeneous ideal.
        max_steps: Largest homological degree to compute.

    Raises:
        PreconditionError: If a generator is not homogeneous.
        StepBoundExceeded: If the resolution is longer than ``max_steps``;
            ``partial`` holds the Betti table computed so far.
    """
    for g in ideal.generators:
        if g.homogeneous_degree is None:
            raise PreconditionError(f"Generator {g} of {ideal.name or 'I'} is not homogeneous")
    local = ideal.restrict_to_used() if not ideal.is_zero else ideal
    ring = local.ring
    twists: list[tuple[int, ...]] = [(0,)]
    differentials: list[PolyMatrix] = []
    if local.is_zero:
        return GradedFreeComplex(ring, tuple(twists), ())

    weights: list[int] = [0]
    current = _minimal_subset(
        ring, [{(0, *m): c for m, c in g.terms.items()} for g in local.generators], weights
    )
    step = 1
    while current:
        if step > max_steps:
            partial = BettiTable.from_twists(twists)
            raise StepBoundExceeded(
                partial, f"Resolution of {ideal.name or 'I'} needs more than {max_steps} steps"
            )
        differentials.append(_to_matrix(ring, current, len(weights)))
        syzygies, degrees = _syzygies(ring, current, weights)
        twists.append(tuple(degrees))
        weights = degrees
        current = _minimal_subset(ring, syzygies, weights) if syzygies else []
        logger.debug("minimal_resolution %s: step %d has rank %d", ideal.name, step, len(degrees))
        step += 1
    return GradedFreeComplex(ring, tuple(twists), tuple(differentials))


def minimal_betti(ideal: Ideal, max_steps: int) -> BettiTable:
    """Graded Betti numbers of a minimal free resolution of R/I.

    Raises:
        PreconditionError: If a generator is not homogeneous.
        StepBoundExceeded: If the resolution is longer than ``max_steps``.
    """
    return minimal_resolution(ideal, max_steps).betti()
