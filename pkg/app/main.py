"""Command-line entry point."""

import asyncio
import logging
import sys
from pathlib import Path

from app.cli.commands import execute, output_format, parse_args
from app.config import settings
from app.domain.enums import OutputFormat
from app.domain.errors import DomainError
from app.shared.exceptions import handle_domain_error

logger = logging.getLogger(__name__)


def configure_logging(level: str) -> None:
    """Send log records to stderr so reports on stdout stay clean."""
    logging.basicConfig(
        level=level.upper(),
        format="%(asctime)s %(levelname)s %(name)s %(message)s",
        stream=sys.stderr,
    )


def _write(payload: str, out: str | None) -> None:
    if out:
        Path(out).write_text(payload + "\n", encoding="utf-8")
        logger.info("report written to %s", out)
    else:
        print(payload)


def main(argv: list[str] | None = None) -> int:
    """Run one command.

    Args:
        argv: Arguments without the program name; None reads ``sys.argv``.

    Returns:
        0 on success, otherwise the exit code of the domain error raised.
    """
    fmt = OutputFormat.JSON
    try:
        args = parse_args(argv)
        fmt = output_format(args)
        output = asyncio.run(execute(args))
    except DomainError as exc:
        return handle_domain_error(exc, fmt)
    _write(output.payload, args.out)
    if output.failure is not None:
        return handle_domain_error(output.failure, fmt)
    return 0


def run() -> None:
    """Console-script entry point."""
    configure_logging(settings.LOG_LEVEL)
    sys.exit(main())


if __name__ == "__main__":
    run()
