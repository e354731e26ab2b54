"""Pfaffians, minors and determinants of polynomial matrices."""

from functools import cache
from itertools import combinations

from app.domain.errors import ValidationError
from app.domain.models.matrix import PolyMatrix
from app.domain.models.polynomial import Polynomial


def _require_skew(m: PolyMatrix) -> None:
    if not m.is_skew_symmetric():
        raise ValidationError(f"Matrix of shape {m.shape} is not skew-symmetric")


def _pfaffian_of(m: PolyMatrix, indices: tuple[int, ...]) -> Polynomial:
    """Pfaffian of the principal submatrix on ``indices``, expanded along its first row."""

    @cache
    def pf(idx: tuple[int, ...]) -> Polynomial:
        if not idx:
            return Polynomial.constant(m.ring, 1)
        first, rest = idx[0], idx[1:]
        total = Polynomial.zero(m.ring)
        for pos, j in enumerate(rest):
            entry = m.get(first, j)
            if entry.is_zero:
                continue
            minor = pf(rest[:pos] + rest[pos + 1 :])
            total = total + entry * minor if pos % 2 == 0 else total - entry * minor
        return total

    return pf(indices)


def pfaffian(m: PolyMatrix) -> Polynomial:
    """Pfaffian of a skew-symmetric matrix of even size.

    Raises:
        ValidationError: If the matrix is not skew-symmetric or has odd size.
    """
    _require_skew(m)
    if m.rows % 2:
        raise ValidationError(f"Pfaffian needs even size, got {m.rows}")
    return _pfaffian_of(m, tuple(range(m.rows)))


def submaximal_pfaffians(m: PolyMatrix) -> list[Polynomial]:
    """Signed submaximal Pfaffians ``(-1)^i Pf(M without row and column i)`` of an odd skew matrix.

    The resulting row vector p satisfies ``p · M = 0``.

    Raises:
        ValidationError: If the matrix is not skew-symmetric or has even size.
    """
    _require_skew(m)
    n = m.rows
    if n % 2 == 0:
        raise ValidationError(f"Submaximal Pfaffians need odd size, got {n}")
    out = []
    for i in range(n):
        value = _pfaffian_of(m, tuple(j for j in range(n) if j != i))
        out.append(-value if i % 2 else value)
    return out


def principal_pfaffians(m: PolyMatrix, k: int) -> list[Polynomial]:
    """All k x k principal sub-Pfaffians, index sets in lexicographic order; zeros omitted.

    Raises:
        ValidationError: If the matrix is not skew-symmetric or k is odd or too large.
    """
    _require_skew(m)
    if k % 2 or not 0 < k <= m.rows:
        raise ValidationError(f"Cannot take {k}x{k} Pfaffians of a {m.rows}x{m.rows} matrix")
    values = (_pfaffian_of(m, idx) for idx in combinations(range(m.rows), k))
    return [v for v in values if not v.is_zero]


def minors2(m: PolyMatrix) -> list[Polynomial]:
    """2x2 minors of a 2 x n matrix, column pairs in lexicographic order; zeros omitted.

    Raises:
        ValidationError: If the matrix does not have two rows.
    """
    if m.rows != 2:
        raise ValidationError(f"minors2 needs a 2 x n matrix, got {m.rows} x {m.cols}")
    out = []
    for i, j in combinations(range(m.cols), 2):
        value = m.get(0, i) * m.get(1, j) - m.get(0, j) * m.get(1, i)
        if not value.is_zero:
            out.append(value)
    return out


def determinant(m: PolyMatrix) -> Polynomial:
    """Determinant by Laplace expansion with memoised minors.

    Raises:
        ValidationError: If the matrix is not square.
    """
    if not m.is_square():
        raise ValidationError(f"Determinant of a non-square {m.shape} matrix")
    n = m.rows

    @cache
    def minor(row: int, cols: tuple[int, ...]) -> Polynomial:
        if row == n:
            return Polynomial.constant(m.ring, 1)
        total = Polynomial.zero(m.ring)
        for pos, j in enumerate(cols):
            entry = m.get(row, j)
            if entry.is_zero:
                continue
            term = entry * minor(row + 1, cols[:pos] + cols[pos + 1 :])
            total = total + term if pos % 2 == 0 else total - term
        return total

    return minor(0, tuple(range(n)))


def product_entries(a: PolyMatrix, b: PolyMatrix) -> list[Polynomial]:
    """Nonzero entries of ``a · b`` in row-major order."""
    prod = a @ b
    return [prod.entries[pos] for pos in sorted(prod.entries)]


def variety_of_complexes(x: PolyMatrix, y: PolyMatrix) -> list[Polynomial]:
    """Generators of ``I_1(X·Y) + I_2(Y)`` for a k x 2 matrix Y.

    Raises:
        ValidationError: If Y does not have two columns or the product is undefined.
    """
    if y.cols != 2:
        raise ValidationError(f"Variety of complexes needs Y with 2 columns, got {y.cols}")
    return product_entries(x, y) + minors2(y.transpose())
