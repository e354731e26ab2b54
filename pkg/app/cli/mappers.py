"""Mappers from application results to report schemas."""

from collections.abc import Mapping

from app.application.dtos import (
    BettiResult,
    EntryView,
    GorensteinResult,
    GraphResult,
    GroebnerResult,
    HilbertResult,
    LicciResult,
    LinkResult,
    SuiteReport,
)
from app.cli.schemas import (
    AppendixResponse,
    BettiResponse,
    CatalogItemResponse,
    CatalogListResponse,
    CheckResponse,
    ConfigResponse,
    EdgeResponse,
    EntryResponse,
    GorensteinResponse,
    GraphResponse,
    GroebnerResponse,
    HilbertResponse,
    LicciResponse,
    LinkResponse,
    MismatchResponse,
    SuiteItemResponse,
    SuiteResponse,
    VertexResponse,
)
from app.domain.enums import CheckStatus, Variant
from app.domain.models.catalog import CatalogEntry
from app.domain.models.complex import BettiTable
from app.domain.models.reports import AppendixReport, CheckResult
from app.domain.value_objects.run_config import RunConfig


def config_to_response(config: RunConfig) -> ConfigResponse:
    """Map a RunConfig to the configuration echo of a report.

    Args:
        config: Run configuration.

    Returns:
        A ConfigResponse Pydantic model.
    """
    return ConfigResponse(
        field=config.field,
        prime=config.prime,
        seed=config.seed,
        max_steps=config.max_steps,
        rank_points=config.rank_points,
    )


def check_to_response(check: CheckResult) -> CheckResponse:
    return CheckResponse(
        key=check.key,
        check=check.check,
        status=check.status,
        expected=check.expected,
        computed=check.computed,
        note=check.note,
    )


def entry_to_item(entry: CatalogEntry) -> CatalogItemResponse:
    """Map a catalog entry to its listing row."""
    expect = entry.expect
    return CatalogItemResponse(
        key=entry.key,
        ring=entry.ring,
        node=entry.node,
        codim=expect.codim,
        dim=expect.dim,
        h=str(expect.h) if expect.h is not None else None,
        gorenstein=expect.gorenstein,
        description=expect.description,
        core_suite=entry.core_suite,
    )


def entries_to_response(entries: list[CatalogEntry]) -> CatalogListResponse:
    return CatalogListResponse(
        command="catalog list",
        count=len(entries),
        entries=[entry_to_item(e) for e in entries],
    )


def entry_view_to_response(view: EntryView, variant: Variant) -> EntryResponse:
    """Map an EntryView to the ``catalog show`` report.

    Args:
        view: Entry with its built generators.
        variant: Generator text the view was built from.

    Returns:
        An EntryResponse Pydantic model.
    """
    entry = view.entry
    expect = entry.expect
    return EntryResponse(
        command="catalog show",
        config=config_to_response(view.config),
        key=entry.key,
        ring=entry.ring,
        variant=variant,
        source=entry.source,
        node=entry.node,
        generators=[str(g) for g in view.generators],
        matrices=dict(entry.matrices),
        recipe=entry.recipe,
        core=list(entry.core_generators),
        expect=entry_to_item(entry),
        twists=expect.twists.twists_text() if expect.twists is not None else None,
        totals=list(expect.totals) if expect.totals is not None else None,
        ledger=dict(entry.ledger),
    )


# --- Ideals ---


def groebner_to_response(result: GroebnerResult) -> GroebnerResponse:
    return GroebnerResponse(
        command="ideal gb",
        config=config_to_response(result.config),
        key=result.key,
        variant=result.variant,
        table_match=result.table_match,
        size=len(result.basis),
        basis=[str(g) for g in result.basis],
    )


def hilbert_to_response(result: HilbertResult) -> HilbertResponse:
    """Map a HilbertResult to the ``ideal hilbert`` report.

    Raises:
        ValueError: If the result carries no Hilbert data.
    """
    data = result.data
    if data is None:
        raise ValueError(f"Hilbert result for {result.key} has no data")
    return HilbertResponse(
        command="ideal hilbert",
        config=config_to_response(result.config),
        key=result.key,
        variant=result.variant,
        table_match=result.table_match,
        checks=[check_to_response(c) for c in result.checks],
        codim=data.codim,
        dim=data.dim,
        h=str(data.h_vector),
        k_numerator=str(data.k_numerator),
        degree=data.degree,
        hilbert_function=list(result.prefix),
    )


def gorenstein_to_response(result: GorensteinResult) -> GorensteinResponse:
    return GorensteinResponse(
        command="ideal gorenstein",
        config=config_to_response(result.config),
        key=result.key,
        variant=result.variant,
        table_match=result.table_match,
        checks=[check_to_response(c) for c in result.checks],
        palindromic=result.palindromic,
        h=result.h_vector,
        printed=result.printed,
        appendix=result.appendix,
    )


def betti_to_response(result: BettiResult) -> BettiResponse:
    return BettiResponse(
        command="ideal betti",
        config=config_to_response(result.config),
        key=result.key,
        variant=result.variant,
        table_match=result.table_match,
        checks=[check_to_response(c) for c in result.checks],
        betti=result.betti.to_json(),
        totals=list(result.betti.totals),
        twists=result.betti.twists_text(),
    )


def _extreme_twists(betti: BettiTable) -> tuple[int, int]:
    if betti.length < 1:
        return 0, 0
    return max(betti.twists(betti.length)), min(betti.twists(1))


def licci_to_response(result: LicciResult) -> LicciResponse:
    """Map a LicciResult to the ``ideal licci`` report."""
    max_last, min_first = _extreme_twists(result.betti)
    return LicciResponse(
        command="ideal licci",
        config=config_to_response(result.config),
        key=result.key,
        variant=result.variant,
        table_match=result.table_match,
        checks=[check_to_response(c) for c in result.checks],
        target=result.target,
        codim=result.codim,
        verdict=result.verdict,
        max_last_twist=max_last,
        min_first_twist=min_first,
        betti=result.betti.to_json(),
    )


# --- Linkage ---


def link_to_response(result: LinkResult) -> LinkResponse:
    report = result.report
    claim = result.claim
    return LinkResponse(
        command="link",
        config=config_to_response(result.config),
        first=report.first,
        second=report.second,
        sequence=[str(p) for p in report.sequence],
        regular_sequence=report.regular_sequence_ok,
        colon_forward=report.colon_forward_ok,
        colon_backward=report.colon_backward_ok,
        linked=report.linked,
        claim=claim.key if claim is not None else None,
        variant=result.variant,
        ledger=dict(claim.ledger) if claim is not None else {},
    )


# --- Graphs ---


def appendix_to_response(
    report: AppendixReport, ledger: Mapping[tuple[int, str], str]
) -> AppendixResponse:
    return AppendixResponse(
        rows=report.rows,
        matched=report.matched,
        passed=report.passed,
        mismatches=[
            MismatchResponse(
                node=m.node,
                column=m.column,
                expected=m.expected,
                computed=m.computed,
                ledger=ledger.get((m.node, m.column), ""),
            )
            for m in report.mismatches
        ],
        weights_skipped=list(report.weights_skipped),
        node_map={str(k): v for k, v in sorted(report.node_map.items())},
    )


def graph_to_response(result: GraphResult) -> GraphResponse:
    """Map a GraphResult to the ``graph`` report."""
    graph = result.graph
    return GraphResponse(
        command="graph",
        label=graph.label,
        vertex_count=len(graph),
        vertices=[
            VertexResponse(index=v.index, weight=list(v.weight), word=v.word, length=v.length)
            for v in graph.vertices
        ],
        edges=[EdgeResponse(source=a, target=b, label=t) for a, b, t in graph.edges()],
        graded=result.graded,
        unique_extremes=result.unique_extremes,
        self_dual=result.self_dual,
        appendix=(
            appendix_to_response(result.appendix, result.ledger)
            if result.appendix is not None
            else None
        ),
    )


# --- Verification ---


def suite_to_response(report: SuiteReport) -> SuiteResponse:
    """Map a SuiteReport to the ``verify`` report.

    Args:
        report: Outcome of the suite.

    Returns:
        A SuiteResponse with per-item wall times and status counts.
    """
    return SuiteResponse(
        command="verify",
        config=config_to_response(report.config),
        suite=report.suite,
        passed=report.count(CheckStatus.PASS),
        ledger=report.count(CheckStatus.LEDGER),
        failures=report.count(CheckStatus.FAIL),
        skipped=report.count(CheckStatus.SKIPPED),
        failed=report.failed_keys,
        seconds=report.seconds,
        items=[
            SuiteItemResponse(
                key=item.key,
                seconds=item.seconds,
                failed=item.failed,
                checks=[check_to_response(c) for c in item.checks],
            )
            for item in report.items
        ],
    )
