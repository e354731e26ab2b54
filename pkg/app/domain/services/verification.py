"""Checks of catalog entries, links, identities and graphs against printed data."""

import logging
import random
from collections.abc import Callable, Collection, Mapping
from dataclasses import dataclass, replace

from sympy import nextprime

from app.domain.enums import CheckStatus, Labelling, LicciVerdict, Suite, Variant
from app.domain.errors import DomainError
from app.domain.models.catalog import CatalogEntry, LinkEntry
from app.domain.models.complex import BettiTable
from app.domain.models.crystal import RootDatum, WeightTable
from app.domain.models.hilbert_data import HilbertData
from app.domain.models.ideal import Ideal, MonomialIdeal
from app.domain.models.polynomial import Polynomial
from app.domain.models.reports import CheckResult
from app.domain.services.catalog import HUNEKE_ULRICH_KEY, CatalogBuilder
from app.domain.services.complexes import verify_resolution
from app.domain.services.groebner import (
    contains_ideal,
    groebner_basis,
    ideals_equal,
    leading_term_ideal,
    over_field,
)
from app.domain.services.hilbert import hilbert_function_prefix, hilbert_series
from app.domain.services.linkage import check_linked, licci_criterion
from app.domain.services.resolution import minimal_betti
from app.domain.services.weyl import (
    build_crystal,
    has_unique_extremes,
    is_graded,
    is_self_dual,
    verify_appendix_tables,
)
from app.domain.value_objects.field import CoefficientField

logger = logging.getLogger(__name__)

TABLE_OF_FAMILY = {"E6": "E6/w1", "E7": "E7/w7"}
# The E6 cell has dimension 16; node lengths count dimensions of the cell.
E6_CELL_DIMENSION = 16


def outcome(
    key: str,
    check: str,
    expected: object,
    computed: object,
    ledger: Mapping[str, str] | None = None,
    ledger_field: str | None = None,
) -> CheckResult:
    """PASS on equality; otherwise LEDGER when the field has a ledger note, else FAIL."""
    expected_text, computed_text = _text(expected), _text(computed)
    if expected == computed:
        return CheckResult(key, check, CheckStatus.PASS, expected_text, computed_text)
    note = (ledger or {}).get(ledger_field or check, "")
    status = CheckStatus.LEDGER if note else CheckStatus.FAIL
    logger.warning(
        "%s %s: expected %s, computed %s (%s)", key, check, expected_text, computed_text, status
    )
    return CheckResult(key, check, status, expected_text, computed_text, note)


def skipped(key: str, check: str, reason: str) -> CheckResult:
    return CheckResult(key, check, CheckStatus.SKIPPED, note=reason)


def _text(value: object) -> str:
    if isinstance(value, BettiTable):
        return value.twists_text()
    if isinstance(value, tuple):
        return ",".join(str(v) for v in value)
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _guarded(key: str, check: str, run: Callable[[], CheckResult]) -> CheckResult:
    try:
        return run()
    except DomainError as exc:
        logger.warning("%s %s raised %s: %s", key, check, type(exc).__name__, exc.message)
        return CheckResult(key, check, CheckStatus.FAIL, note=exc.message)


def hilbert_checks(entry: CatalogEntry, data: HilbertData) -> list[CheckResult]:
    """Printed codim, dim, h-vector and Gorenstein flag against the computed Hilbert data."""
    expect, key, ledger = entry.expect, entry.key, entry.ledger
    results = []
    if expect.codim is not None:
        results.append(outcome(key, "codim", expect.codim, data.codim, ledger))
    if expect.dim is not None:
        results.append(outcome(key, "dim", expect.dim, data.dim, ledger))
    if expect.h is not None:
        results.append(outcome(key, "h", expect.h, data.h_vector, ledger))
    if expect.gorenstein is not None:
        results.append(outcome(key, "gorenstein", expect.gorenstein, data.is_palindromic, ledger))
    return results


def node_checks(
    entry: CatalogEntry, data: HilbertData, tables: Mapping[str, WeightTable]
) -> list[CheckResult]:
    """Codim or dim against the node length, and palindromicity against the table flag."""
    table = tables.get(TABLE_OF_FAMILY.get(entry.family, ""))
    if entry.node is None or table is None:
        return []
    key, ledger = entry.key, entry.ledger
    try:
        row = table.row(entry.node)
    except DomainError as exc:
        return [CheckResult(key, "node_length", CheckStatus.FAIL, note=exc.message)]
    if entry.family == "E6":
        length = outcome(key, "node_length", E6_CELL_DIMENSION - row.dim, data.codim, ledger)
    else:
        length = outcome(key, "node_length", row.dim, data.dim, ledger)
    flag = outcome(
        key, "appendix_gorenstein", row.gorenstein, data.is_palindromic, ledger, "gorenstein"
    )
    return [length, flag]


def betti_checks(entry: CatalogEntry, betti: BettiTable) -> list[CheckResult]:
    results = []
    if entry.expect.twists is not None:
        results.append(outcome(entry.key, "twists", entry.expect.twists, betti))
    if entry.expect.totals is not None:
        results.append(outcome(entry.key, "totals", entry.expect.totals, betti.totals))
    return results


# --- Property checks ---


def prefix_check(key: str, ideal: Ideal, data: HilbertData, degree: int) -> CheckResult:
    """The Hilbert series expanded to ``degree`` against counted standard monomials."""
    series = data.k_numerator.series_prefix(data.nvars, degree)
    counted = hilbert_function_prefix(ideal, degree)
    return outcome(key, "hilbert_prefix", tuple(series), tuple(counted))


def shuffle_check(key: str, ideal: Ideal, shuffles: int, seed: int) -> CheckResult:
    """The reduced Gröbner basis is the same for ``shuffles`` random generator orders."""
    reference = groebner_basis(ideal)
    rng = random.Random(f"{seed}:{key}")
    differing = 0
    for _ in range(shuffles):
        gens = list(ideal.generators)
        rng.shuffle(gens)
        if groebner_basis(Ideal(ideal.ring, tuple(gens), ideal.name)) != reference:
            differing += 1
    result = outcome(key, "shuffle", 0, differing)
    return replace(result, note=result.note or f"{shuffles} shuffles")


def _lt_text(lt: MonomialIdeal) -> str:
    degrees = sorted(sum(m) for m in lt.generators)
    return f"{len(degrees)} generators of degree {degrees[0]}..{degrees[-1]}" if degrees else "0"


def cross_field_check(key: str, modular: Ideal, rational: Ideal) -> CheckResult:
    """Leading-term ideals over the rationals and over F_p must agree.

    A disagreement marks p as unlucky for the ideal; the next prime then decides.
    The check passes with a note when the second prime agrees with the rationals.
    """
    expected = leading_term_ideal(rational)
    computed = leading_term_ideal(modular)
    text = _lt_text(expected)
    if computed == expected:
        return CheckResult(key, "cross_field", CheckStatus.PASS, text, text)
    p = modular.ring.coefficient_field.characteristic
    q = int(nextprime(p))
    second = leading_term_ideal(over_field(rational, CoefficientField.prime(q)))
    if second == expected:
        logger.warning("%s: F_%d is unlucky, F_%d agrees with the rationals", key, p, q)
        return CheckResult(
            key, "cross_field", CheckStatus.PASS, text, text, f"F_{p} unlucky; F_{q} agrees"
        )
    logger.warning("%s: leading terms differ over F_%d and F_%d", key, p, q)
    return CheckResult(
        key,
        "cross_field",
        CheckStatus.FAIL,
        text,
        _lt_text(computed),
        f"F_{p} and F_{q} both differ from the rationals",
    )


@dataclass(frozen=True)
class VerifyOptions:
    """Knobs shared by every check of a run.

    Attributes:
        suite: Suite being run; heavy checks only run in the full suite.
        seed: Seed of the random points.
        prime: Characteristic of the modular rank checks.
        points: Random points per exactness check.
        max_steps: Step bound for minimal resolutions.
        max_complex_rank: Largest recipe complex built in full.
        prefix_degree: Last degree of the Hilbert function compared with the series.
        shuffles: Generator orders tried per shuffled entry.
        shuffle_keys: Entries whose Gröbner basis is recomputed under shuffling.
    """

    suite: Suite = Suite.CORE
    seed: int = 20201
    prime: int = 32003
    points: int = 3
    max_steps: int = 8
    max_complex_rank: int = 4096
    prefix_degree: int = 3
    shuffles: int = 20
    shuffle_keys: tuple[str, ...] = ()


class EntryVerifier:
    """Runs every applicable check of one ideal entry.

    Args:
        builder: Builder over the field of the run.
        tables: Printed weight tables by label.
        options: Run options.
        rational: Builder over the rationals for spot checks, if any.
        rational_keys: Entries re-run over the rationals; the full suite re-runs every entry.
    """

    def __init__(
        self,
        builder: CatalogBuilder,
        tables: Mapping[str, WeightTable],
        options: VerifyOptions,
        *,
        rational: CatalogBuilder | None = None,
        rational_keys: Collection[str] = (),
    ) -> None:
        self._builder = builder
        self._tables = tables
        self._options = options
        self._rational = rational
        self._rational_keys = rational_keys
        self._betti: dict[str, BettiTable] = {}

    def verify(self, key: str) -> list[CheckResult]:
        entry = self._builder.catalog.entry(key)
        ideal = self._builder.ideal(key)
        try:
            data = hilbert_series(ideal)
        except DomainError as exc:
            return [CheckResult(key, "hilbert", CheckStatus.FAIL, note=exc.message)]
        results = hilbert_checks(entry, data)
        results += node_checks(entry, data, self._tables)
        results += self._betti_checks(entry, ideal)
        results += self._core_checks(entry, ideal)
        results += self._recipe_checks(entry, ideal, data)
        results += self._alt_checks(entry, ideal)
        results += self._property_checks(key, ideal, data)
        rational = self._rational
        if rational is not None and (
            key in self._rational_keys or self._options.suite is Suite.FULL
        ):
            results.append(
                _guarded(
                    key,
                    "cross_field",
                    lambda: cross_field_check(key, ideal, rational.ideal(key)),
                )
            )
            results.append(
                _guarded(
                    key,
                    "qq_h",
                    lambda: outcome(
                        key, "qq_h", data.h_vector, hilbert_series(rational.ideal(key)).h_vector
                    ),
                )
            )
        return results

    # --- Resolutions ---

    def _minimal_betti(self, key: str, ideal: Ideal) -> BettiTable:
        if key not in self._betti:
            self._betti[key] = minimal_betti(ideal, self._options.max_steps)
        return self._betti[key]

    def _betti_checks(self, entry: CatalogEntry, ideal: Ideal) -> list[CheckResult]:
        expect, key = entry.expect, entry.key
        results = []
        if expect.twists is not None:
            twists = expect.twists
            results.append(
                _guarded(
                    key,
                    "twists",
                    lambda: outcome(key, "twists", twists, self._minimal_betti(key, ideal)),
                )
            )
        if expect.totals is not None:
            totals = expect.totals
            if entry.recipe:
                results.append(
                    _guarded(
                        key,
                        "totals",
                        lambda: outcome(
                            key, "totals", totals, self._builder.recipe_betti(key).totals
                        ),
                    )
                )
            elif self._options.suite is Suite.FULL or key in self._betti:
                results.append(
                    _guarded(
                        key,
                        "totals",
                        lambda: outcome(
                            key, "totals", totals, self._minimal_betti(key, ideal).totals
                        ),
                    )
                )
            else:
                results.append(skipped(key, "totals", "minimal resolution runs in the full suite"))
        return results

    def _core_checks(self, entry: CatalogEntry, ideal: Ideal) -> list[CheckResult]:
        core = self._builder.core_ideal(entry.key)
        if core is None:
            return []
        expect, key = entry.expect, entry.key
        core_key = f"{key}'"
        results = [
            _guarded(
                key,
                "core_contained",
                lambda: outcome(key, "core_contained", True, contains_ideal(ideal, core)),
            )
        ]
        if expect.core_h is not None:
            core_h = expect.core_h
            results.append(
                _guarded(
                    key,
                    "core_h",
                    lambda: outcome(key, "core_h", core_h, hilbert_series(core).h_vector),
                )
            )
        if expect.core_twists is not None:
            core_twists = expect.core_twists
            results.append(
                _guarded(
                    key,
                    "core_twists",
                    lambda: outcome(
                        key, "core_twists", core_twists, self._minimal_betti(core_key, core)
                    ),
                )
            )
        if expect.core_totals is not None:
            core_totals = expect.core_totals
            results.append(
                _guarded(
                    key,
                    "core_totals",
                    lambda: outcome(
                        key, "core_totals", core_totals, self._minimal_betti(core_key, core).totals
                    ),
                )
            )
        if entry.licci_core:
            results.append(_guarded(key, "licci", lambda: self._licci(key, core_key, core)))
        return results

    def _licci(self, key: str, core_key: str, core: Ideal) -> CheckResult:
        betti = self._minimal_betti(core_key, core)
        verdict = licci_criterion(betti, hilbert_series(core).codim)
        return outcome(key, "licci", LicciVerdict.NOT_LICCI, verdict)

    def _recipe_checks(
        self, entry: CatalogEntry, ideal: Ideal, data: HilbertData
    ) -> list[CheckResult]:
        if not entry.recipe:
            return []
        key = entry.key
        results = [_guarded(key, "resolution", lambda: self._resolution(key, ideal, data))]
        if entry.expect.twists is not None:
            twists = entry.expect.twists
            results.append(
                _guarded(
                    key,
                    "recipe_twists",
                    lambda: outcome(key, "recipe_twists", twists, self._builder.recipe_betti(key)),
                )
            )
        return results

    def _resolution(self, key: str, ideal: Ideal, data: HilbertData) -> CheckResult:
        betti = self._builder.recipe_betti(key)
        rank = sum(betti.totals)
        if rank > self._options.max_complex_rank:
            result = outcome(key, "resolution", data.k_numerator, betti.euler_polynomial())
            return replace(result, note=f"total rank {rank}; Euler characteristic only")
        report = verify_resolution(
            self._builder.recipe_complex(key),
            ideal,
            seed=self._options.seed,
            prime=self._options.prime,
            points=self._options.points,
        )
        status = CheckStatus.PASS if report.passed else CheckStatus.FAIL
        if not report.passed:
            logger.warning("%s recipe fails %s", key, ", ".join(report.failures))
        return CheckResult(
            key, "resolution", status, "resolves", ",".join(report.failures) or "resolves"
        )

    # --- Other presentations ---

    def _alt_checks(self, entry: CatalogEntry, ideal: Ideal) -> list[CheckResult]:
        key = entry.key
        if key == HUNEKE_ULRICH_KEY and entry.has_alt:
            return [_guarded(key, "huneke_ulrich", self._huneke_ulrich)]
        alt = self._builder.alt_ideal(key)
        if alt is None:
            return []
        return [_guarded(key, "alt", lambda: outcome(key, "alt", True, ideals_equal(alt, ideal)))]

    def _huneke_ulrich(self) -> CheckResult:
        """I_1(Y·X) + Pf(X) equals the listed J51; a difference raises VerificationFailure."""
        self._builder.huneke_ulrich_build()
        return CheckResult(HUNEKE_ULRICH_KEY, "huneke_ulrich", CheckStatus.PASS, "equal", "equal")

    # --- Properties ---

    def _property_checks(self, key: str, ideal: Ideal, data: HilbertData) -> list[CheckResult]:
        options = self._options
        results = [
            _guarded(
                key,
                "hilbert_prefix",
                lambda: prefix_check(key, ideal, data, options.prefix_degree),
            )
        ]
        if key in options.shuffle_keys:
            results.append(
                _guarded(
                    key,
                    "shuffle",
                    lambda: shuffle_check(key, ideal, options.shuffles, options.seed),
                )
            )
        return results


# --- Catalog-wide checks ---


def verify_identities(builder: CatalogBuilder, labelling: Labelling) -> list[CheckResult]:
    """Listed derivatives against computed partials, and ``sum x_i f_i = 3Q``."""
    key = f"derivatives/{labelling}"
    entry = builder.catalog.entry(key)
    cubic = builder.cubic(labelling)
    ring = cubic.ring

    def mismatches(variant: Variant) -> list[int]:
        listed = builder.derivatives(labelling, variant)
        return [
            i
            for i in range(1, ring.nvars + 1)
            if listed.get(i) != cubic.partial_derivative(ring.variables[i - 1])
        ]

    results = [
        _guarded(
            key,
            "derivatives",
            lambda: outcome(key, "derivatives", (), tuple(mismatches(Variant.EMENDED))),
        )
    ]
    if entry.emended:
        printed = tuple(mismatches(Variant.PRINTED))
        results.append(outcome(key, "printed_derivatives", (), printed, entry.ledger, "gen"))

    def euler() -> CheckResult:
        listed = builder.derivatives(labelling)
        total = Polynomial.zero(ring)
        for i, name in enumerate(ring.variables, start=1):
            total = total + Polynomial.variable(ring, name) * listed[i]
        return outcome(key, "euler", True, total == cubic.scalar_mul(3))

    results.append(_guarded(key, "euler", euler))
    return results


def verify_link(builder: CatalogBuilder, link: LinkEntry) -> list[CheckResult]:
    """The emended sequence must link; the printed one is reported against the ledger."""
    first = builder.ideal(link.first)
    second = builder.ideal(link.second)

    def linked(variant: Variant, check: str) -> CheckResult:
        sequence = builder.link_sequence(link, variant)
        report = check_linked(first, second, sequence)
        return outcome(link.key, check, True, report.linked, link.ledger, "seq")

    results = [_guarded(link.key, "linked", lambda: linked(Variant.EMENDED, "linked"))]
    if link.emended:
        printed = _guarded(
            link.key, "printed_linked", lambda: linked(Variant.PRINTED, "printed_linked")
        )
        if printed.status is CheckStatus.FAIL and "seq" in link.ledger:
            printed = CheckResult(
                link.key, printed.check, CheckStatus.LEDGER, note=link.ledger["seq"]
            )
        results.append(printed)
    return results


def verify_chain(builder: CatalogBuilder, upper: str, lower: str) -> CheckResult:
    """``J_upper ⊆ J_lower`` for nested generator lists."""
    check = f"contained_in:{lower}"
    return _guarded(
        upper,
        check,
        lambda: outcome(
            upper, check, True, contains_ideal(builder.ideal(lower), builder.ideal(upper))
        ),
    )


def verify_graph(table: WeightTable) -> list[CheckResult]:
    """Structure of the crystal graph and agreement with its printed table."""
    key = table.label
    type_label, _, weight = key.partition("/w")
    try:
        graph = build_crystal(RootDatum.of(type_label), int(weight))
    except (DomainError, ValueError) as exc:
        return [CheckResult(key, "graph", CheckStatus.FAIL, note=str(exc))]
    results = [
        outcome(key, "vertices", len(table.rows), len(graph)),
        outcome(key, "graded", True, is_graded(graph)),
        outcome(key, "unique_extremes", True, has_unique_extremes(graph)),
        outcome(key, "self_dual", True, is_self_dual(graph)),
    ]
    report = verify_appendix_tables(graph, table.rows)
    computed = f"{report.matched}/{report.rows} rows match"
    expected = f"{report.rows}/{report.rows} rows match"
    unexplained = [m for m in report.mismatches if not table.note(m.node, m.column)]
    if report.passed:
        results.append(CheckResult(key, "table", CheckStatus.PASS, expected, computed))
    elif unexplained:
        cells = ", ".join(f"{m.node}.{m.column}" for m in unexplained)
        logger.warning("%s table: unexplained mismatches at %s", key, cells)
        results.append(
            CheckResult(key, "table", CheckStatus.FAIL, expected, computed, f"unexplained {cells}")
        )
    else:
        notes = "; ".join(
            f"{m.node}.{m.column}: {table.note(m.node, m.column)}" for m in report.mismatches
        )
        results.append(CheckResult(key, "table", CheckStatus.LEDGER, expected, computed, notes))
    return results
