"""Argument parsing and command handlers."""

import argparse
from collections.abc import Awaitable, Callable
from dataclasses import dataclass
from typing import NoReturn

from app.application.use_cases.catalog.show_entry import ShowEntryInput
from app.application.use_cases.graphs.build_graph import BuildGraphInput
from app.application.use_cases.ideals.betti_numbers import BettiInput
from app.application.use_cases.ideals.hilbert_series import HilbertInput
from app.application.use_cases.ideals.load_ideal import IdealInput
from app.application.use_cases.linkage.check_link import CATALOG_SEQUENCE, CheckLinkInput
from app.application.use_cases.verify.run_suite import RunSuiteInput
from app.cli import dependencies as deps
from app.cli import mappers, render
from app.cli.schemas import CamelModel
from app.config import settings
from app.domain.enums import FieldKind, OutputFormat, Suite, Variant
from app.domain.errors import DomainError, ValidationError, VerificationFailure
from app.domain.value_objects.run_config import RunConfig

IDEAL_OPERATIONS = ("gb", "hilbert", "gorenstein", "betti", "licci")


class _ArgumentParser(argparse.ArgumentParser):
    """Parser whose usage errors surface as validation errors."""

    def error(self, message: str) -> NoReturn:
        raise ValidationError(f"{self.prog}: {message}")


@dataclass(frozen=True)
class CommandOutput:
    """Rendered report of a command.

    Attributes:
        payload: Text written to stdout or ``--out``.
        failure: Error to report after the payload is written, if any.
    """

    payload: str
    failure: DomainError | None = None


def _split(text: str) -> tuple[str, ...]:
    return tuple(k.strip() for k in text.split(",") if k.strip())


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", choices=[f.value for f in FieldKind])
    common.add_argument("--prime", type=int, help="characteristic of F_p")
    common.add_argument("--seed", type=int, help="seed of the random points")
    common.add_argument("--max-steps", dest="max_steps", type=int)
    common.add_argument("--rank-points", dest="rank_points", type=int)
    common.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat])
    common.add_argument("--out", help="write the report to this file")
    common.add_argument(
        "--printed", action="store_true", help="use the printed text instead of the emended one"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """Parser for every subcommand; shared flags are accepted after the subcommand."""
    common = _common_options()
    parser = _ArgumentParser(
        prog="schubert-cells",
        description="Ideals of Schubert cells in the E6 and E7 cubic hypersurfaces.",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    catalog = commands.add_parser("catalog", parents=[common], help="list or show catalog entries")
    catalog.add_argument("action", choices=["list", "show"])
    catalog.add_argument("key", nargs="?")
    catalog.add_argument("--family", choices=["E6", "E7"])

    ideal = commands.add_parser("ideal", parents=[common], help="compute with a catalog ideal")
    ideal.add_argument("key")
    ideal.add_argument("operation", choices=IDEAL_OPERATIONS)
    ideal.add_argument("--prefix", type=int, help="Hilbert function up to this degree")
    ideal.add_argument(
        "--recipe", action="store_true", help="Betti table of the structured resolution"
    )

    link = commands.add_parser("link", parents=[common], help="check a linkage claim")
    link.add_argument("first")
    link.add_argument("second")
    link.add_argument(
        "--seq",
        default=CATALOG_SEQUENCE,
        help=f"comma-separated generators, or {CATALOG_SEQUENCE} for the stored sequence",
    )

    graph = commands.add_parser("graph", parents=[common], help="build a minuscule crystal graph")
    graph.add_argument("type_label", metavar="TYPE")
    graph.add_argument("weight", metavar="WEIGHT")
    graph.add_argument("--verify", action="store_true", help="compare with the printed table")

    verify = commands.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("--suite", choices=[s.value for s in Suite], default=Suite.CORE.value)
    verify.add_argument("--workers", type=int, default=None)
    verify.add_argument("--keys", default="", help="comma-separated entry keys")
    return parser


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse command-line arguments.

    Raises:
        ValidationError: On unknown commands, options or values.
    """
    return build_parser().parse_args(argv)


def output_format(args: argparse.Namespace) -> OutputFormat:
    value = args.output_format or settings.OUTPUT_FORMAT
    if value not in OutputFormat:
        raise ValidationError(f"Unknown output format {value!r}")
    return OutputFormat(value)


def run_config(args: argparse.Namespace) -> RunConfig:
    """Assemble the RunConfig from flags, falling back to settings.

    Raises:
        ValidationError: If the resulting configuration is invalid.
    """
    def pick(value: int | None, default: int) -> int:
        return default if value is None else value

    field_name = args.field or settings.DEFAULT_FIELD
    if field_name not in FieldKind:
        raise ValidationError(f"Unknown field {field_name!r}")
    field = FieldKind(field_name)
    fmt = output_format(args)
    return RunConfig(
        field=field,
        prime=pick(args.prime, settings.DEFAULT_PRIME),
        seed=pick(args.seed, settings.SEED),
        max_steps=pick(args.max_steps, settings.MAX_STEPS),
        output_format=fmt,
        rank_points=pick(args.rank_points, settings.RANK_POINTS),
    )


def _variant(args: argparse.Namespace) -> Variant:
    return Variant.PRINTED if args.printed else Variant.EMENDED


def _render(config: RunConfig, model: CamelModel, text: Callable[[], str]) -> str:
    if config.output_format is OutputFormat.TEXT:
        return text()
    if config.output_format is OutputFormat.DOT:
        raise ValidationError("DOT output is only available for the graph command")
    return model.model_dump_json(by_alias=True, indent=2)


# --- Handlers ---


async def cmd_catalog(args: argparse.Namespace, config: RunConfig) -> CommandOutput:
    if args.action == "list":
        entries = await deps.get_list_entries().execute(family=args.family)
        listing = mappers.entries_to_response(entries)
        return CommandOutput(_render(config, listing, lambda: render.entries_text(entries)))
    if not args.key:
        raise ValidationError("catalog show needs a KEY")
    variant = _variant(args)
    view = await deps.get_show_entry().execute(
        ShowEntryInput(key=args.key, config=config, variant=variant)
    )
    return CommandOutput(
        _render(
            config,
            mappers.entry_view_to_response(view, variant),
            lambda: render.entry_view_text(view),
        )
    )


async def cmd_ideal(args: argparse.Namespace, config: RunConfig) -> CommandOutput:
    """Run one ideal operation; ``table_match`` compares against the printed data."""
    variant = _variant(args)
    base = IdealInput(key=args.key, config=config, variant=variant)
    operation = args.operation
    if operation == "gb":
        gb = await deps.get_groebner_basis().execute(base)
        return CommandOutput(
            _render(config, mappers.groebner_to_response(gb), lambda: render.groebner_text(gb))
        )
    if operation == "hilbert":
        hs = await deps.get_hilbert_series().execute(
            HilbertInput(key=args.key, config=config, variant=variant, prefix=args.prefix)
        )
        return CommandOutput(
            _render(config, mappers.hilbert_to_response(hs), lambda: render.hilbert_text(hs))
        )
    if operation == "gorenstein":
        gor = await deps.get_check_gorenstein().execute(base)
        return CommandOutput(
            _render(
                config, mappers.gorenstein_to_response(gor), lambda: render.gorenstein_text(gor)
            )
        )
    if operation == "betti":
        betti = await deps.get_compute_betti().execute(
            BettiInput(key=args.key, config=config, variant=variant, from_recipe=args.recipe)
        )
        return CommandOutput(
            _render(config, mappers.betti_to_response(betti), lambda: render.betti_text(betti))
        )
    licci = await deps.get_check_licci().execute(base)
    return CommandOutput(
        _render(config, mappers.licci_to_response(licci), lambda: render.licci_text(licci))
    )


async def cmd_link(args: argparse.Namespace, config: RunConfig) -> CommandOutput:
    result = await deps.get_check_link().execute(
        CheckLinkInput(
            first=args.first,
            second=args.second,
            sequence=args.seq,
            config=config,
            variant=_variant(args),
        )
    )
    return CommandOutput(
        _render(config, mappers.link_to_response(result), lambda: render.link_text(result))
    )


async def cmd_graph(args: argparse.Namespace, config: RunConfig) -> CommandOutput:
    result = await deps.get_build_graph().execute(
        BuildGraphInput(type_label=args.type_label, weight=args.weight, verify=args.verify)
    )
    if config.output_format is OutputFormat.DOT:
        return CommandOutput(result.graph.to_dot())
    if config.output_format is OutputFormat.TEXT:
        return CommandOutput(render.graph_text(result))
    return CommandOutput(
        mappers.graph_to_response(result).model_dump_json(by_alias=True, indent=2)
    )


async def cmd_verify(args: argparse.Namespace, config: RunConfig) -> CommandOutput:
    """Run a suite; the report is always written and failures are raised after it."""
    if args.workers is not None and args.workers < 0:
        raise ValidationError("--workers cannot be negative")
    suite = Suite(args.suite)
    report = await deps.get_run_suite().execute(
        RunSuiteInput(
            suite=suite,
            config=config,
            workers=settings.WORKERS if args.workers is None else args.workers,
            max_complex_rank=settings.MAX_COMPLEX_RANK,
            rational_keys=_split(settings.QQ_SPOT_CHECKS),
            keys=_split(args.keys),
            shuffle_keys=_split(settings.SHUFFLE_KEYS),
            shuffles=settings.SHUFFLES,
            prefix_degree=settings.PREFIX_DEGREE,
        )
    )
    payload = _render(config, mappers.suite_to_response(report), lambda: render.suite_text(report))
    failure = None
    if report.failed_keys:
        failure = VerificationFailure(
            report.failed_keys,
            f"{len(report.failed_keys)} unexplained mismatches: {', '.join(report.failed_keys)}",
        )
    return CommandOutput(payload, failure)


HANDLERS: dict[str, Callable[[argparse.Namespace, RunConfig], Awaitable[CommandOutput]]] = {
    "catalog": cmd_catalog,
    "ideal": cmd_ideal,
    "link": cmd_link,
    "graph": cmd_graph,
    "verify": cmd_verify,
}


async def execute(args: argparse.Namespace) -> CommandOutput:
    """Dispatch parsed arguments to their handler.

    Raises:
        DomainError: Whatever the handler raises.
    """
    return await HANDLERS[args.command](args, run_config(args))
