"""Regular sequences, linkage checks and the licci criterion."""

import logging
from collections.abc import Sequence

from app.domain.enums import LicciVerdict
from app.domain.errors import PreconditionError, RingMismatchError, ValidationError
from app.domain.models.complex import BettiTable
from app.domain.models.ideal import Ideal
from app.domain.models.polynomial import Polynomial
from app.domain.models.reports import LinkReport
from app.domain.services.groebner import colon, contains, ideals_equal, krull_dimension

logger = logging.getLogger(__name__)


def codimension(ideal: Ideal) -> int:
    return ideal.ring.nvars - krull_dimension(ideal)


def is_regular_sequence(sequence: Sequence[Polynomial]) -> bool:
    """True iff every prefix ``(a_1..a_k)`` has codimension k.

    In a polynomial ring with homogeneous elements this is equivalent to regularity.
    """
    if not sequence:
        return True
    ring = sequence[0].ring
    if any(a.ring != ring for a in sequence):
        raise RingMismatchError("Sequence elements live in different rings")
    for k in range(1, len(sequence) + 1):
        prefix = sequence[:k]
        if any(a.is_zero for a in prefix):
            return False
        if codimension(Ideal(ring, tuple(prefix))) != k:
            logger.debug("is_regular_sequence: prefix of length %d drops codimension", k)
            return False
    return True


def check_linked(first: Ideal, second: Ideal, sequence: Sequence[Polynomial]) -> LinkReport:
    """Check that ``first`` and ``second`` are linked by ``sequence``.

    Raises:
        ValidationError: If the sequence is empty.
        RingMismatchError: If the ideals live in different rings.
        PreconditionError: If an element of the sequence is missing from either ideal.
    """
    if not sequence:
        raise ValidationError("Linking sequence is empty")
    if first.ring != second.ring:
        raise RingMismatchError("Linked ideals must share a ring")
    for a in sequence:
        for ideal in (first, second):
            if not contains(ideal, a):
                raise PreconditionError(
                    f"Sequence element {a} does not lie in {ideal.name or 'the ideal'}"
                )
    c = Ideal(first.ring, tuple(sequence), "c")
    regular = is_regular_sequence(sequence)
    forward = ideals_equal(colon(c, first), second)
    backward = ideals_equal(colon(c, second), first)
    report = LinkReport(
        first=first.name,
        second=second.name,
        sequence=tuple(sequence),
        regular_sequence_ok=regular,
        colon_forward_ok=forward,
        colon_backward_ok=backward,
    )
    if not report.linked:
        logger.warning(
            "%s and %s not linked: regular=%s forward=%s backward=%s",
            first.name,
            second.name,
            regular,
            forward,
            backward,
        )
    return report


def licci_criterion(betti: BettiTable, codim: int) -> LicciVerdict:
    """Rule out licci when ``max n_gj <= (g - 1) min n_1j``.

    Args:
        betti: Betti table of a minimal resolution of R/I.
        codim: Codimension g of I.

    Raises:
        PreconditionError: If the resolution length differs from ``codim``.
    """
    g = betti.length
    if g != codim:
        raise PreconditionError(
            f"Resolution has length {g} but codimension is {codim}; criterion does not apply"
        )
    if g < 1:
        raise PreconditionError("The licci criterion needs a proper nonzero ideal")
    last = max(betti.twists(g))
    first = min(betti.twists(1))
    verdict = LicciVerdict.NOT_LICCI if last <= (g - 1) * first else LicciVerdict.INCONCLUSIVE
    logger.debug("licci_criterion: g=%d max=%d min=%d -> %s", g, last, first, verdict)
    return verdict
