"""Graded free complexes and Betti tables."""

import re
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from app.domain.errors import ParseError, RingMismatchError, ValidationError
from app.domain.models.matrix import PolyMatrix
from app.domain.models.ring import AmbientRing
from app.domain.value_objects.t_polynomial import TPolynomial

_TWIST = re.compile(r"^(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``beta[i, j]``: homological degree i, internal degree j.

    Attributes:
        entries: Nonzero Betti numbers keyed by ``(i, j)``.
    """

    entries: dict[tuple[int, int], int] = field(default_factory=dict, hash=False)

    def __post_init__(self) -> None:
        for (i, j), b in self.entries.items():
            if i < 0 or b < 0:
                raise ValidationError(f"Bad Betti entry beta[{i},{j}] = {b}")
        object.__setattr__(self, "entries", {k: b for k, b in self.entries.items() if b})

    @classmethod
    def from_twists(cls, twists: Sequence[Iterable[int]]) -> "BettiTable":
        """Table of a complex whose i-th module is ``⊕ R(-n)`` over ``twists[i]``."""
        entries: Counter[tuple[int, int]] = Counter()
        for i, module in enumerate(twists):
            for n in module:
                entries[(i, n)] += 1
        return cls(dict(entries))

    @classmethod
    def parse_twists(cls, text: str) -> "BettiTable":
        """Parse ``0 | 2^5 | 3 4^11 | 5^10 | 6 7``: modules separated by ``|``.

        Raises:
            ParseError: If a twist is not ``n`` or ``n^count``.
        """
        modules: list[list[int]] = []
        for part in text.split("|"):
            module: list[int] = []
            for token in part.split():
                match = _TWIST.match(token)
                if match is None:
                    raise ParseError(f"Bad twist {token!r} in {text!r}")
                module += [int(match.group(1))] * int(match.group(2) or 1)
            modules.append(module)
        return cls.from_twists(modules)

    @property
    def length(self) -> int:
        """Largest homological degree with a nonzero entry; -1 if empty."""
        return max((i for i, _ in self.entries), default=-1)

    def rank(self, i: int) -> int:
        return sum(b for (k, _), b in self.entries.items() if k == i)

    @property
    def totals(self) -> tuple[int, ...]:
        return tuple(self.rank(i) for i in range(self.length + 1))

    def twists(self, i: int) -> list[int]:
        """Sorted twists of the i-th module, with repetition."""
        out: list[int] = []
        for (k, j), b in sorted(self.entries.items()):
            if k == i:
                out += [j] * b
        return out

    def euler_polynomial(self) -> TPolynomial:
        """``sum_i (-1)^i sum_j beta[i, j] T^j``."""
        result = TPolynomial()
        for (i, j), b in self.entries.items():
            result = result + TPolynomial.monomial(j, -b if i % 2 else b)
        return result

    def tensor(self, other: "BettiTable") -> "BettiTable":
        """Betti numbers of the tensor product of two complexes."""
        entries: Counter[tuple[int, int]] = Counter()
        for (i, j), a in self.entries.items():
            for (k, n), b in other.entries.items():
                entries[(i + k, j + n)] += a * b
        return BettiTable(dict(entries))

    def twists_text(self) -> str:
        """Inverse of ``parse_twists``."""
        parts = []
        for i in range(self.length + 1):
            row = sorted((j, b) for (k, j), b in self.entries.items() if k == i)
            parts.append(" ".join(str(j) if b == 1 else f"{j}^{b}" for j, b in row))
        return " | ".join(parts)

    def display(self) -> str:
        """Table with a ``total:`` row and one row per shift ``j - i``; zeros print as ``.``."""
        if not self.entries:
            return "total:"
        shifts = sorted({j - i for i, j in self.entries})
        columns = range(self.length + 1)
        labels = ["total:", *(f"{s}:" for s in shifts)]
        rows = [[str(self.rank(i)) for i in columns]]
        for s in shifts:
            rows.append([str(self.entries.get((i, i + s), ".")) for i in columns])
        width = max(len(c) for r in rows for c in r)
        label_width = max(len(lb) for lb in labels)
        header = " " * label_width + " " + " ".join(str(i).rjust(width) for i in columns)
        body = [
            label.rjust(label_width) + " " + " ".join(c.rjust(width) for c in row)
            for label, row in zip(labels, rows, strict=True)
        ]
        return "\n".join([header, *body])

    def to_json(self) -> dict[str, dict[str, int] | list[int]]:
        """``{i: {j: beta}}`` plus a ``total`` row."""
        rows: dict[str, dict[str, int]] = {}
        for (i, j), b in sorted(self.entries.items()):
            rows.setdefault(str(i), {})[str(j)] = b
        out: dict[str, dict[str, int] | list[int]] = dict(rows)
        out["total"] = list(self.totals)
        return out


@dataclass(eq=False)
class GradedFreeComplex:
    """A complex ``F_0 <- F_1 <- ... <- F_n`` of graded free modules.

    Attributes:
        ring: Ring of the differential entries.
        twists: ``twists[i]`` lists n for each summand ``R(-n)`` of F_i.
        differentials: ``differentials[i - 1]`` is d_i : F_i -> F_(i-1), shaped
            ``(rank F_(i-1), rank F_i)``.

    Raises:
        ValidationError: If shapes do not match ranks or an entry has the wrong degree.
        RingMismatchError: If a differential lives in another ring.
    """

    ring: AmbientRing
    twists: tuple[tuple[int, ...], ...]
    differentials: tuple[PolyMatrix, ...]

    def __post_init__(self) -> None:
        if len(self.differentials) != max(len(self.twists) - 1, 0):
            raise ValidationError(
                f"{len(self.twists)} modules need {len(self.twists) - 1} differentials"
            )
        for i, d in enumerate(self.differentials, start=1):
            if d.ring != self.ring:
                raise RingMismatchError(f"Differential d_{i} is not over {self.ring.name}")
            expected = (len(self.twists[i - 1]), len(self.twists[i]))
            if d.shape != expected:
                raise ValidationError(f"d_{i} has shape {d.shape}, expected {expected}")
            for (r, c), v in d.entries.items():
                degree = self.twists[i][c] - self.twists[i - 1][r]
                if v.homogeneous_degree != degree:
                    raise ValidationError(
                        f"d_{i} entry ({r}, {c}) = {v} is not homogeneous of degree {degree}"
                    )

    @property
    def length(self) -> int:
        return len(self.twists) - 1

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(len(t) for t in self.twists)

    def differential(self, i: int) -> PolyMatrix:
        """d_i for ``1 <= i <= length``."""
        if not 1 <= i <= self.length:
            raise ValidationError(f"No differential d_{i} in a complex of length {self.length}")
        return self.differentials[i - 1]

    def betti(self) -> BettiTable:
        return BettiTable.from_twists(self.twists)

    def display(self) -> str:
        """``R <- R^5(-2) <- R^5(-3) <- R(-5) <- 0``."""
        modules = []
        for twists in self.twists:
            counts = Counter(twists)
            summands = []
            for n in sorted(counts):
                power = f"^{counts[n]}" if counts[n] > 1 else ""
                shift = f"(-{n})" if n else ""
                summands.append(f"R{power}{shift}")
            modules.append("⊕".join(summands) or "0")
        return " ← ".join([*modules, "0"])
