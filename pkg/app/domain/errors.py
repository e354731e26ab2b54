"""Domain exceptions for the Schubert-cell toolkit."""

from typing import Any


class DomainError(Exception):
    """Base exception for all domain-level errors."""

    def __init__(self, message: str = "Domain error") -> None:
        self.message = message
        super().__init__(self.message)


class NotFoundError(DomainError):
    """Raised when a catalog key, variable or graph vertex does not exist."""

    def __init__(self, message: str = "Resource not found") -> None:
        super().__init__(message)


class ValidationError(DomainError):
    """Raised when input data fails domain validation rules."""

    def __init__(self, message: str = "Validation error") -> None:
        super().__init__(message)


class RingMismatchError(DomainError):
    """Raised when two operands live in different ambient rings."""

    def __init__(self, message: str = "Operands belong to different rings") -> None:
        super().__init__(message)


class ParseError(DomainError):
    """Raised when polynomial, matrix or catalog text cannot be parsed."""

    def __init__(self, message: str = "Could not parse input") -> None:
        super().__init__(message)


class PreconditionError(DomainError):
    """Raised when an operation is applied outside its mathematical preconditions."""

    def __init__(self, message: str = "Precondition not satisfied") -> None:
        super().__init__(message)


class StepBoundExceeded(DomainError):
    """Raised when a resolution needs more steps than allowed.

    Attributes:
        partial: The Betti table computed before the bound was hit.
    """

    def __init__(self, partial: Any, message: str = "Step bound exceeded") -> None:
        self.partial = partial
        super().__init__(message)


class VerificationFailure(DomainError):
    """Raised when a verification run has unexplained mismatches.

    Attributes:
        keys: Catalog keys of the failing entries.
    """

    def __init__(self, keys: list[str], message: str = "Verification failed") -> None:
        self.keys = keys
        super().__init__(message)
