"""Sparse matrices with polynomial entries."""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from app.domain.errors import ParseError, RingMismatchError, ValidationError
from app.domain.models.polynomial import Polynomial
from app.domain.models.ring import AmbientRing
from app.domain.services.modular_linalg import IntMatrix

Position = tuple[int, int]


@dataclass(eq=False)
class PolyMatrix:
    """A rows x cols matrix over ``ring`` storing only its nonzero entries.

    Attributes:
        ring: Ring of the entries.
        shape: ``(rows, cols)``.
        entries: Position to nonzero polynomial; zeros are dropped on construction.

    Raises:
        ValidationError: If a position is outside the shape.
        RingMismatchError: If an entry lives in another ring.
    """

    ring: AmbientRing
    shape: tuple[int, int]
    entries: dict[Position, Polynomial]

    def __post_init__(self) -> None:
        rows, cols = self.shape
        if rows < 0 or cols < 0:
            raise ValidationError(f"Bad matrix shape {self.shape}")
        clean: dict[Position, Polynomial] = {}
        for (i, j), value in self.entries.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise ValidationError(f"Entry ({i}, {j}) outside a {rows}x{cols} matrix")
            if value.ring != self.ring:
                raise RingMismatchError(f"Matrix entry is not in ring {self.ring.name}")
            if not value.is_zero:
                clean[(i, j)] = value
        self.entries = clean

    # --- Constructors ---

    @classmethod
    def zeros(cls, ring: AmbientRing, rows: int, cols: int) -> "PolyMatrix":
        return cls(ring, (rows, cols), {})

    @classmethod
    def from_rows(cls, ring: AmbientRing, rows: Sequence[Sequence[Polynomial]]) -> "PolyMatrix":
        """Build from a dense list of rows.

        Raises:
            ValidationError: If the rows have different lengths.
        """
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise ValidationError("Matrix rows have different lengths")
        entries = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)}
        return cls(ring, (len(rows), width), entries)

    @classmethod
    def parse(cls, text: str, ring: AmbientRing, *, indexed: bool = False) -> "PolyMatrix":
        """Parse ``a, b, c; d, e, f``: rows split by ``;``, entries by ``,``.

        Raises:
            ParseError: If an entry does not parse or rows are ragged.
        """
        rows = [r for r in text.split(";") if r.strip()]
        if not rows:
            raise ParseError("Empty matrix text")
        parsed = [
            [Polynomial.parse(cell, ring, indexed=indexed) for cell in row.split(",")]
            for row in rows
        ]
        try:
            return cls.from_rows(ring, parsed)
        except ValidationError as exc:
            raise ParseError(f"Ragged matrix text: {text!r}") from exc

    # --- Queries ---

    @property
    def rows(self) -> int:
        return self.shape[0]

    @property
    def cols(self) -> int:
        return self.shape[1]

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def get(self, i: int, j: int) -> Polynomial:
        return self.entries.get((i, j)) or Polynomial.zero(self.ring)

    def row(self, i: int) -> list[Polynomial]:
        return [self.get(i, j) for j in range(self.cols)]

    def column(self, j: int) -> list[Polynomial]:
        return [self.get(i, j) for i in range(self.rows)]

    def to_rows(self) -> list[list[Polynomial]]:
        return [self.row(i) for i in range(self.rows)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_skew_symmetric(self) -> bool:
        if not self.is_square():
            return False
        for (i, j), v in self.entries.items():
            if i == j or self.get(j, i) != -v:
                return False
        return True

    def entry_degree(self) -> int | None:
        """Common degree of all nonzero entries, or None if they are mixed or inhomogeneous."""
        degrees = {v.homogeneous_degree for v in self.entries.values()}
        if len(degrees) != 1:
            return None
        return degrees.pop()

    # --- Algebra ---

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            self.ring, (self.cols, self.rows), {(j, i): v for (i, j), v in self.entries.items()}
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        row_pos = {r: k for k, r in enumerate(rows)}
        col_pos = {c: k for k, c in enumerate(cols)}
        return PolyMatrix(
            self.ring,
            (len(rows), len(cols)),
            {
                (row_pos[i], col_pos[j]): v
                for (i, j), v in self.entries.items()
                if i in row_pos and j in col_pos
            },
        )

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if other.ring != self.ring:
            raise RingMismatchError("Matrix rings differ")
        if self.cols != other.rows:
            raise ValidationError(f"Cannot multiply {self.shape} by {other.shape}")
        by_row: dict[int, list[tuple[int, Polynomial]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict[Position, Polynomial] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out[(i, j)] = out[(i, j)] + a * b if (i, j) in out else a * b
        return PolyMatrix(self.ring, (self.rows, other.cols), out)

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, self.shape, {p: -v for p, v in self.entries.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (
            self.ring == other.ring and self.shape == other.shape and self.entries == other.entries
        )

    __hash__ = None  # type: ignore[assignment]

    def evaluate_modular(self, point: Sequence[int], p: int) -> IntMatrix:
        """Entries evaluated at an F_p point, as an int64 array."""
        out = np.zeros(self.shape, dtype=np.int64)
        for (i, j), v in self.entries.items():
            out[i, j] = v.evaluate_modular(point, p)
        return out

    def __str__(self) -> str:
        return "; ".join(", ".join(v.to_text() for v in row) for row in self.to_rows())
