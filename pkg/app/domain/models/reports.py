"""Verification reports produced by the domain services."""

from dataclasses import dataclass, field

from app.domain.enums import CheckStatus
from app.domain.models.polynomial import Polynomial


@dataclass(frozen=True)
class ResolutionReport:
    """Outcome of checking that a complex resolves an ideal.

    Exactness is certified by generic ranks at random points together with the
    Euler characteristic match, not by a depth computation.

    Attributes:
        d_squared_zero: Every composite ``d_i ∘ d_(i+1)`` vanishes exactly.
        euler_matches: Graded Euler polynomial equals the Hilbert numerator of R/I.
        generic_exact: Rank condition holds at every sampled point.
        generates_ideal: Entries of d_1 generate I.
        seed: Seed of the point generator.
        prime: Characteristic used for the rank checks.
        ranks: Ranks of d_1..d_n at each point.
        failures: Names of the failed checks.
    """

    d_squared_zero: bool
    euler_matches: bool
    generic_exact: bool
    generates_ideal: bool
    seed: int
    prime: int
    ranks: tuple[tuple[int, ...], ...] = ()
    failures: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class LinkReport:
    """Outcome of a linkage check between two ideals.

    Attributes:
        first: Name of the first ideal.
        second: Name of the second ideal.
        sequence: The linking sequence.
        regular_sequence_ok: The sequence is regular.
        colon_forward_ok: ``(seq) : first == second``.
        colon_backward_ok: ``(seq) : second == first``.
    """

    first: str
    second: str
    sequence: tuple[Polynomial, ...]
    regular_sequence_ok: bool
    colon_forward_ok: bool
    colon_backward_ok: bool

    @property
    def linked(self) -> bool:
        return self.regular_sequence_ok and self.colon_forward_ok and self.colon_backward_ok


@dataclass(frozen=True)
class TableMismatch:
    """One disagreement between a computed graph vertex and a printed table row."""

    node: int
    column: str
    expected: str
    computed: str


@dataclass(frozen=True)
class AppendixReport:
    """Comparison of a crystal graph with a printed weight table.

    Attributes:
        label: Graph label such as ``E6/w1``.
        rows: Number of table rows compared.
        matched: Rows with no mismatch.
        mismatches: Every disagreement found.
        weights_skipped: Nodes whose printed weight has entries of magnitude above 1;
            only their word and dimension are compared.
        node_map: Printed node number to canonical vertex index.
    """

    label: str
    rows: int
    matched: int
    mismatches: tuple[TableMismatch, ...] = ()
    weights_skipped: tuple[int, ...] = ()
    node_map: dict[int, int] = field(default_factory=dict, hash=False)

    @property
    def passed(self) -> bool:
        return not self.mismatches


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check of a catalog entry against its printed data.

    Attributes:
        key: Entry, link or graph the check belongs to.
        check: Check name such as ``h`` or ``linked``.
        status: Pass, fail, known slip or skipped.
        expected: Printed value, as text.
        computed: Computed value, as text.
        note: Ledger note, skip reason or error message.
    """

    key: str
    check: str
    status: CheckStatus
    expected: str = ""
    computed: str = ""
    note: str = ""
