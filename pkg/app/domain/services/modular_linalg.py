"""Dense linear algebra over F_p on numpy int64 arrays."""

import numpy as np
import numpy.typing as npt

IntMatrix = npt.NDArray[np.int64]


def row_echelon_mod_p(matrix: IntMatrix, p: int) -> tuple[IntMatrix, list[int]]:
    """Row-reduce a matrix over F_p.

    Args:
        matrix: Integer matrix (m x n); entries are reduced mod p first.
        p: A prime below 2^31, so products of reduced entries fit in int64.

    Returns:
        The row-echelon form with monic pivots, and the pivot column indices.
    """
    r = np.asarray(matrix, dtype=np.int64) % p
    m, n = r.shape
    pivot_cols: list[int] = []
    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break
        nonzero = np.nonzero(r[pivot_row:, col])[0]
        if nonzero.size == 0:
            continue
        found = pivot_row + int(nonzero[0])
        if found != pivot_row:
            r[[pivot_row, found]] = r[[found, pivot_row]]
        r[pivot_row] = r[pivot_row] * pow(int(r[pivot_row, col]), -1, p) % p
        below = r[pivot_row + 1 :, col].copy()
        if below.any():
            r[pivot_row + 1 :] = (r[pivot_row + 1 :] - np.outer(below, r[pivot_row])) % p
        pivot_cols.append(col)
        pivot_row += 1
    return r, pivot_cols


def rank_mod_p(matrix: IntMatrix, p: int) -> int:
    """Rank of an integer matrix over F_p; empty matrices have rank 0."""
    if matrix.size == 0:
        return 0
    _, pivots = row_echelon_mod_p(matrix, p)
    return len(pivots)
