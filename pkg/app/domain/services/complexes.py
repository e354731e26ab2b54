"""Builders for structured free complexes, tensor products, minimisation and verification."""

import logging
import random
from collections.abc import Sequence
from itertools import combinations

from app.domain.errors import RingMismatchError, ValidationError
from app.domain.models.complex import BettiTable, GradedFreeComplex
from app.domain.models.ideal import Ideal
from app.domain.models.matrix import PolyMatrix, Position
from app.domain.models.polynomial import Polynomial
from app.domain.models.reports import ResolutionReport
from app.domain.services.groebner import ideals_equal
from app.domain.services.hilbert import hilbert_series
from app.domain.services.matrices import submaximal_pfaffians
from app.domain.services.modular_linalg import rank_mod_p

logger = logging.getLogger(__name__)


def _degree_of(p: Polynomial) -> int:
    d = p.homogeneous_degree
    if d is None:
        raise ValidationError(f"{p} is not homogeneous")
    return d


def _common_entry_degree(m: PolyMatrix) -> int:
    d = m.entry_degree()
    if d is None:
        raise ValidationError("Matrix entries must be homogeneous of one common degree")
    return d


# --- Builders ---


def koszul_complex(elements: Sequence[Polynomial]) -> GradedFreeComplex:
    """Koszul complex on homogeneous elements; F_k has the k-subsets in lexicographic order.

    Raises:
        ValidationError: If the list is empty or contains a zero or inhomogeneous element.
    """
    if not elements:
        raise ValidationError("Koszul complex needs at least one element")
    if any(a.is_zero for a in elements):
        raise ValidationError("Koszul complex on a list containing zero")
    ring = elements[0].ring
    if any(a.ring != ring for a in elements):
        raise RingMismatchError("Koszul elements live in different rings")
    degrees = [_degree_of(a) for a in elements]
    n = len(elements)
    bases = [list(combinations(range(n), k)) for k in range(n + 1)]
    twists = tuple(tuple(sum(degrees[s] for s in subset) for subset in basis) for basis in bases)
    differentials = []
    for k in range(1, n + 1):
        index = {subset: i for i, subset in enumerate(bases[k - 1])}
        entries: dict[Position, Polynomial] = {}
        for col, subset in enumerate(bases[k]):
            for pos, s in enumerate(subset):
                row = index[subset[:pos] + subset[pos + 1 :]]
                a = elements[s]
                entries[(row, col)] = -a if pos % 2 else a
        differentials.append(PolyMatrix(ring, (len(bases[k - 1]), len(bases[k])), entries))
    return GradedFreeComplex(ring, twists, tuple(differentials))


def koszul_betti(degrees: Sequence[int]) -> BettiTable:
    """Betti table of the Koszul complex on elements of the given degrees, without building it."""
    table = BettiTable({(0, 0): 1})
    for d in degrees:
        table = table.tensor(BettiTable({(0, 0): 1, (1, d): 1}))
    return table


def pfaffian_complex(m: PolyMatrix) -> GradedFreeComplex:
    """Buchsbaum-Eisenbud complex ``R <- F_1 <- F_2 <- R`` of a (2n+1) skew matrix.

    d_1 is the row of signed submaximal Pfaffians p, d_2 is M and d_3 is p transposed.

    Raises:
        ValidationError: If M is not skew-symmetric of odd size at least 3 with
            homogeneous entries of one degree.
    """
    if m.rows < 3 or m.rows % 2 == 0:
        raise ValidationError(f"Pfaffian complex needs odd size >= 3, got {m.rows}")
    p = submaximal_pfaffians(m)
    e = _common_entry_degree(m)
    size = m.rows
    n = size // 2
    ring = m.ring
    d1 = PolyMatrix(ring, (1, size), {(0, j): v for j, v in enumerate(p)})
    d3 = PolyMatrix(ring, (size, 1), {(j, 0): v for j, v in enumerate(p)})
    twists = ((0,), (n * e,) * size, ((n + 1) * e,) * size, (size * e,))
    return GradedFreeComplex(ring, twists, (d1, m, d3))


def eagon_northcott(m: PolyMatrix) -> GradedFreeComplex:
    """Eagon-Northcott resolution of the 2x2 minors of a 2 x n matrix.

    F_1 has the column pairs; for k >= 2, F_k has a basis ``(S, a)`` with S a
    (k+1)-subset of columns and ``a`` in ``0..k-1`` the exponent of u in
    ``u^a v^(k-1-a)``. The differential contracts one column of S against u
    (row 0) or v (row 1) with the Koszul sign of its position.

    Raises:
        ValidationError: If M is not 2 x n with n >= 2 and homogeneous entries of one degree.
    """
    if m.rows != 2 or m.cols < 2:
        raise ValidationError(f"Eagon-Northcott needs a 2 x n matrix with n >= 2, got {m.shape}")
    e = _common_entry_degree(m)
    ring = m.ring
    n = m.cols
    pairs = list(combinations(range(n), 2))
    bases: list[list[tuple[tuple[int, ...], int]]] = [[((), 0)], [(s, 0) for s in pairs]]
    for k in range(2, n):
        bases.append([(s, a) for s in combinations(range(n), k + 1) for a in range(k)])
    twists = tuple(tuple([0] if k == 0 else [(k + 1) * e] * len(b)) for k, b in enumerate(bases))

    d1 = PolyMatrix(ring, (1, len(pairs)), {(0, j): v for j, v in enumerate(_all_minors(m))})
    differentials = [d1]
    for k in range(2, n):
        index = {b: i for i, b in enumerate(bases[k - 1])}
        entries: dict[Position, Polynomial] = {}
        for col, (subset, a) in enumerate(bases[k]):
            b = k - 1 - a
            for pos, s in enumerate(subset):
                rest = subset[:pos] + subset[pos + 1 :]
                sign = -1 if pos % 2 else 1
                if a >= 1:
                    _accumulate(entries, (index[(rest, a - 1)], col), m.get(0, s), sign)
                if b >= 1:
                    _accumulate(entries, (index[(rest, a)], col), m.get(1, s), sign)
        differentials.append(PolyMatrix(ring, (len(bases[k - 1]), len(bases[k])), entries))
    return GradedFreeComplex(ring, twists, tuple(differentials))


def _all_minors(m: PolyMatrix) -> list[Polynomial]:
    """All 2x2 minors of a 2 x n matrix in lexicographic column-pair order, zeros kept."""
    return [
        m.get(0, i) * m.get(1, j) - m.get(0, j) * m.get(1, i)
        for i, j in combinations(range(m.cols), 2)
    ]


def _accumulate(
    entries: dict[Position, Polynomial], pos: Position, value: Polynomial, sign: int
) -> None:
    if value.is_zero:
        return
    term = value if sign > 0 else -value
    entries[pos] = entries[pos] + term if pos in entries else term


def tensor(c1: GradedFreeComplex, c2: GradedFreeComplex) -> GradedFreeComplex:
    """Total complex of ``c1 ⊗ c2`` with the sign ``(-1)^i`` on the second differential.

    The basis of the k-th module lists pairs ``(i, a, j, b)`` with ``i + j = k`` in
    increasing i, then a, then b.

    Raises:
        RingMismatchError: If the complexes live in different rings.
    """
    if c1.ring != c2.ring:
        raise RingMismatchError("Cannot tensor complexes over different rings")
    ring = c1.ring
    n = c1.length + c2.length
    bases: list[list[tuple[int, int, int, int]]] = []
    for k in range(n + 1):
        basis = []
        for i in range(max(0, k - c2.length), min(k, c1.length) + 1):
            j = k - i
            basis += [(i, a, j, b) for a in range(c1.ranks[i]) for b in range(c2.ranks[j])]
        bases.append(basis)
    twists = tuple(
        tuple(c1.twists[i][a] + c2.twists[j][b] for i, a, j, b in basis) for basis in bases
    )
    differentials = []
    for k in range(1, n + 1):
        index = {key: r for r, key in enumerate(bases[k - 1])}
        entries: dict[Position, Polynomial] = {}
        for col, (i, a, j, b) in enumerate(bases[k]):
            if i >= 1:
                for (r, c), v in c1.differential(i).entries.items():
                    if c == a:
                        _accumulate(entries, (index[(i - 1, r, j, b)], col), v, 1)
            if j >= 1:
                sign = -1 if i % 2 else 1
                for (r, c), v in c2.differential(j).entries.items():
                    if c == b:
                        _accumulate(entries, (index[(i, a, j - 1, r)], col), v, sign)
        differentials.append(PolyMatrix(ring, (len(bases[k - 1]), len(bases[k])), entries))
    return GradedFreeComplex(ring, twists, tuple(differentials))


# --- Minimisation ---


def minimize(complex_: GradedFreeComplex) -> GradedFreeComplex:
    """Split off every nonzero constant entry until the complex is minimal.

    For a unit u at (r, c) of d_k, basis element c of F_k and r of F_(k-1) are
    removed, ``d_k`` becomes ``A' = A[¬r,¬c] - A[¬r,c] u^-1 A[r,¬c]``, d_(k+1)
    loses row c and d_(k-1) loses column r. Pivots are taken in order of k, then
    row, then column.
    """
    twists = [list(t) for t in complex_.twists]
    diffs = list(complex_.differentials)
    ring = complex_.ring
    field = ring.coefficient_field
    while True:
        pivot = _find_unit(diffs)
        if pivot is None:
            break
        k, r, c = pivot
        a = diffs[k - 1]
        u_inv = field.inv(a.entries[(r, c)].leading_coefficient)
        column = {i: v for (i, j), v in a.entries.items() if j == c and i != r}
        row = {j: v for (i, j), v in a.entries.items() if i == r and j != c}
        updated: dict[Position, Polynomial] = {
            pos: v for pos, v in a.entries.items() if pos[0] != r and pos[1] != c
        }
        for i, vi in column.items():
            for j, vj in row.items():
                _accumulate(updated, (i, j), (vi * vj).scalar_mul(field.neg(u_inv)), 1)
        keep_rows = [i for i in range(a.rows) if i != r]
        keep_cols = [j for j in range(a.cols) if j != c]
        diffs[k - 1] = PolyMatrix(ring, a.shape, updated).submatrix(keep_rows, keep_cols)
        if k < len(diffs):
            nxt = diffs[k]
            diffs[k] = nxt.submatrix(keep_cols, list(range(nxt.cols)))
        if k >= 2:
            prev = diffs[k - 2]
            diffs[k - 2] = prev.submatrix(list(range(prev.rows)), keep_rows)
        del twists[k][c]
        del twists[k - 1][r]
    while len(twists) > 1 and not twists[-1]:
        twists.pop()
        diffs.pop()
    logger.debug("minimize: ranks %s", [len(t) for t in twists])
    return GradedFreeComplex(ring, tuple(tuple(t) for t in twists), tuple(diffs))


def _find_unit(diffs: Sequence[PolyMatrix]) -> tuple[int, int, int] | None:
    for k, d in enumerate(diffs, start=1):
        units = sorted(pos for pos, v in d.entries.items() if v.is_constant)
        if units:
            return k, units[0][0], units[0][1]
    return None


# --- Verification ---


def _point_prime(ideal: Ideal, prime: int) -> int:
    characteristic = ideal.ring.coefficient_field.characteristic
    return characteristic or prime


def verify_resolution(
    complex_: GradedFreeComplex,
    ideal: Ideal,
    *,
    seed: int,
    prime: int,
    points: int = 3,
) -> ResolutionReport:
    """Check that ``complex_`` resolves R/I.

    Checks: (a) ``d_i ∘ d_(i+1) = 0`` exactly; (b) the graded Euler polynomial equals
    the Hilbert numerator of R/I; (c) at ``points`` random F_p points
    ``rank d_i + rank d_(i+1) = rank F_i`` for ``1 <= i <= length``; (d) the entries
    of d_1 generate I.

    Args:
        complex_: The candidate resolution.
        ideal: The ideal it should resolve.
        seed: Seed for the random points.
        prime: Characteristic for the rank checks when the ring is over QQ.
        points: Number of random points.

    Raises:
        RingMismatchError: If the complex and the ideal live in different rings.
        ValidationError: If fewer than one point is requested.
    """
    if complex_.ring != ideal.ring:
        raise RingMismatchError("Complex and ideal live in different rings")
    if points < 1:
        raise ValidationError("At least one random point is needed")
    failures: list[str] = []

    d_squared_zero = all(
        (complex_.differential(i) @ complex_.differential(i + 1)).is_zero
        for i in range(1, complex_.length)
    )
    if not d_squared_zero:
        failures.append("d_squared_zero")

    euler_matches = complex_.betti().euler_polynomial() == hilbert_series(ideal).k_numerator
    if not euler_matches:
        failures.append("euler_matches")

    p = _point_prime(ideal, prime)
    rng = random.Random(seed)
    ranks: list[tuple[int, ...]] = []
    generic_exact = True
    for _ in range(points):
        point = [rng.randrange(p) for _ in range(ideal.ring.nvars)]
        r = tuple(
            rank_mod_p(complex_.differential(i).evaluate_modular(point, p), p)
            for i in range(1, complex_.length + 1)
        )
        ranks.append(r)
        for i in range(1, complex_.length + 1):
            following = r[i] if i < complex_.length else 0
            if r[i - 1] + following != complex_.ranks[i]:
                generic_exact = False
    if not generic_exact:
        failures.append("generic_exact")

    generates_ideal = complex_.length >= 1 and ideals_equal(
        Ideal(ideal.ring, tuple(complex_.differential(1).entries.values())), ideal
    )
    if not generates_ideal:
        failures.append("generates_ideal")

    logger.debug("verify_resolution %s: failures %s", ideal.name, failures)
    return ResolutionReport(
        d_squared_zero=d_squared_zero,
        euler_matches=euler_matches,
        generic_exact=generic_exact,
        generates_ideal=generates_ideal,
        seed=seed,
        prime=p,
        ranks=tuple(ranks),
        failures=tuple(failures),
    )
