"""Plain-text rendering of reports, in the display conventions of the printed tables."""

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
from app.domain.enums import CheckStatus
from app.domain.models.catalog import CatalogEntry
from app.domain.models.reports import CheckResult
from app.domain.value_objects.run_config import RunConfig


def _config_line(config: RunConfig) -> str:
    field = "QQ" if config.field == "qq" else f"F_{config.prime}"
    return f"# field={field} seed={config.seed} max_steps={config.max_steps}"


def _yes_no(value: bool | None) -> str:
    if value is None:
        return "-"
    return "yes" if value else "no"


def _checks(checks: tuple[CheckResult, ...]) -> list[str]:
    lines = []
    for c in checks:
        line = f"  [{c.status}] {c.check}"
        if c.status is not CheckStatus.PASS and (c.expected or c.computed):
            line += f": expected {c.expected or '-'}, computed {c.computed or '-'}"
        if c.note:
            line += f" ({c.note})"
        lines.append(line)
    return lines


def _ideal_header(key: str, config: RunConfig, match: bool) -> list[str]:
    return [_config_line(config), f"{key}  table_match={_yes_no(match)}"]


def entries_text(entries: list[CatalogEntry]) -> str:
    lines = [f"{'key':<14} {'codim':>5} {'dim':>4}  {'h':<28} description"]
    for e in entries:
        x = e.expect
        codim = "" if x.codim is None else str(x.codim)
        dim = "" if x.dim is None else str(x.dim)
        h = "" if x.h is None else str(x.h)
        lines.append(f"{e.key:<14} {codim:>5} {dim:>4}  {h:<28} {x.description}")
    lines.append(f"{len(entries)} entries")
    return "\n".join(lines)


def entry_view_text(view: EntryView) -> str:
    entry = view.entry
    lines = [_config_line(view.config), f"[{entry.key}]  ring={entry.ring}"]
    if entry.source:
        lines.append(f"src: {entry.source}")
    lines += [f"  {g}" for g in view.generators]
    for name, note in entry.ledger.items():
        lines.append(f"ledger {name}: {note}")
    return "\n".join(lines)


def groebner_text(result: GroebnerResult) -> str:
    lines = _ideal_header(result.key, result.config, result.table_match)
    lines.append(f"reduced basis, {len(result.basis)} elements:")
    lines += [f"  {g}" for g in result.basis]
    return "\n".join(lines)


def hilbert_text(result: HilbertResult) -> str:
    """Hilbert series written as ``h(T) / (1-T)^dim``."""
    lines = _ideal_header(result.key, result.config, result.table_match)
    data = result.data
    if data is not None:
        lines += [
            f"codim {data.codim}  dim {data.dim}  degree {data.degree}",
            f"HS = ({data.h_vector}) / (1-T)^{data.dim}",
        ]
    if result.prefix:
        lines.append("H(d) = " + ", ".join(str(v) for v in result.prefix))
    lines += _checks(result.checks)
    return "\n".join(lines)


def gorenstein_text(result: GorensteinResult) -> str:
    lines = _ideal_header(result.key, result.config, result.table_match)
    lines.append(
        f"h = {result.h_vector}  palindromic {_yes_no(result.palindromic)}"
        f"  printed {_yes_no(result.printed)}  appendix {_yes_no(result.appendix)}"
    )
    lines += _checks(result.checks)
    return "\n".join(lines)


def betti_text(result: BettiResult) -> str:
    lines = _ideal_header(result.key, result.config, result.table_match)
    lines += [result.betti.display(), f"twists: {result.betti.twists_text()}"]
    lines += _checks(result.checks)
    return "\n".join(lines)


def licci_text(result: LicciResult) -> str:
    lines = _ideal_header(result.key, result.config, result.table_match)
    lines += [f"{result.target}: codim {result.codim}  {result.verdict}", result.betti.display()]
    lines += _checks(result.checks)
    return "\n".join(lines)


def link_text(result: LinkResult) -> str:
    report = result.report
    lines = [
        _config_line(result.config),
        f"{report.first} ~ {report.second}  linked={_yes_no(report.linked)}",
        f"  regular sequence: {_yes_no(report.regular_sequence_ok)}",
        f"  (c):{report.first} = {report.second}: {_yes_no(report.colon_forward_ok)}",
        f"  (c):{report.second} = {report.first}: {_yes_no(report.colon_backward_ok)}",
        "  c = " + ", ".join(str(p) for p in report.sequence),
    ]
    if result.claim is not None:
        lines += [f"ledger {k}: {v}" for k, v in result.claim.ledger.items()]
    return "\n".join(lines)


def graph_text(result: GraphResult) -> str:
    """One line per vertex: index, weight, reduced word, length."""
    graph = result.graph
    lines = [f"{graph.label}: {len(graph)} vertices"]
    for v in graph.vertices:
        weight = " ".join(f"{c:>2}" for c in v.weight)
        lines.append(f"{v.index:>3}  [{weight}]  {v.word or 'e':<30} {v.length}")
    lines.append(
        f"graded {_yes_no(result.graded)}  unique extremes {_yes_no(result.unique_extremes)}"
        f"  self-dual {_yes_no(result.self_dual)}"
    )
    appendix = result.appendix
    if appendix is not None:
        lines.append(f"table: {appendix.matched}/{appendix.rows} rows match")
        for m in appendix.mismatches:
            line = f"  node {m.node} {m.column}: printed {m.expected}, computed {m.computed}"
            note = result.ledger.get((m.node, m.column), "")
            lines.append(f"{line} (ledger: {note})" if note else line)
    return "\n".join(lines)


def suite_text(report: SuiteReport) -> str:
    """Per-item summary followed by every non-passing check."""
    lines = [_config_line(report.config), f"suite {report.suite}"]
    for item in report.items:
        counts = {s: sum(1 for c in item.checks if c.status is s) for s in CheckStatus}
        flag = "FAIL" if item.failed else "ok"
        lines.append(
            f"{item.key:<24} {flag:<4} {counts[CheckStatus.PASS]:>3} pass"
            f" {counts[CheckStatus.LEDGER]:>2} ledger {item.seconds:>8.2f}s"
        )
        lines += [line for line in _checks(item.checks) if "[pass]" not in line]
    lines.append(
        f"{report.count(CheckStatus.PASS)} pass, {report.count(CheckStatus.LEDGER)} ledger,"
        f" {report.count(CheckStatus.FAIL)} fail, {report.count(CheckStatus.SKIPPED)} skipped"
        f" in {report.seconds:.1f}s"
    )
    if report.failed_keys:
        lines.append("failed: " + ", ".join(report.failed_keys))
    return "\n".join(lines)
