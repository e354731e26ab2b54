"""Mapping of domain errors to machine-readable codes and process exit codes."""

import sys
from typing import TextIO

from app.cli.schemas import ErrorBody, ErrorResponse
from app.domain.enums import OutputFormat
from app.domain.errors import (
    DomainError,
    NotFoundError,
    ParseError,
    PreconditionError,
    RingMismatchError,
    StepBoundExceeded,
    ValidationError,
    VerificationFailure,
)

# Most specific classes first; DomainError itself falls through to GENERIC_ERROR.
ERROR_CODES: tuple[tuple[type[DomainError], str, int], ...] = (
    (NotFoundError, "not_found", 3),
    (ValidationError, "validation", 4),
    (RingMismatchError, "ring_mismatch", 5),
    (ParseError, "parse", 6),
    (PreconditionError, "precondition", 7),
    (StepBoundExceeded, "step_bound", 8),
    (VerificationFailure, "verification", 9),
)
GENERIC_ERROR = ("domain_error", 2)


def error_code(exc: DomainError) -> tuple[str, int]:
    """Machine-readable code and exit code of a domain error.

    Args:
        exc: The raised error.

    Returns:
        ``(code, exit_code)``; unmapped subclasses get the generic pair.
    """
    for error_type, code, exit_code in ERROR_CODES:
        if isinstance(exc, error_type):
            return code, exit_code
    return GENERIC_ERROR


def error_response(exc: DomainError) -> ErrorResponse:
    """Build the ``{"schema": 1, "error": {...}}`` payload of an error."""
    code, _ = error_code(exc)
    keys = exc.keys if isinstance(exc, VerificationFailure) else []
    return ErrorResponse(error=ErrorBody(code=code, message=exc.message, keys=keys))


def handle_domain_error(
    exc: DomainError,
    output_format: OutputFormat = OutputFormat.JSON,
    stream: TextIO | None = None,
) -> int:
    """Report a domain error on stderr and return its exit code.

    Args:
        exc: The raised error.
        output_format: JSON and DOT runs get the JSON payload, text runs one line.
        stream: Destination; defaults to ``sys.stderr``.

    Returns:
        The process exit code for the error.
    """
    out = stream if stream is not None else sys.stderr
    code, exit_code = error_code(exc)
    if output_format is OutputFormat.TEXT:
        print(f"error[{code}]: {exc.message}", file=out)
    else:
        print(error_response(exc).model_dump_json(by_alias=True), file=out)
    return exit_code
