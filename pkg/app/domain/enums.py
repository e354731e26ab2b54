"""Domain enumerations for the Schubert-cell toolkit."""

from enum import StrEnum


class OrderKind(StrEnum):
    """Monomial orders supported by the Gröbner engine."""

    DEGREVLEX = "degrevlex"
    LEX = "lex"
    ELIMINATION = "elimination"


class FieldKind(StrEnum):
    """Coefficient fields selectable from the command line."""

    QQ = "qq"
    FP = "fp"


class Labelling(StrEnum):
    """Variable labellings in which the cubic invariant is catalogued."""

    E7 = "E7"
    E6D5 = "E6D5"


class Variant(StrEnum):
    """Which text of a catalog entry to use."""

    EMENDED = "emended"
    PRINTED = "printed"


class LicciVerdict(StrEnum):
    """Outcome of the licci criterion; it can only rule licci out."""

    NOT_LICCI = "not_licci"
    INCONCLUSIVE = "inconclusive"


class Suite(StrEnum):
    """Verification suites."""

    CORE = "core"
    FULL = "full"


class OutputFormat(StrEnum):
    """Rendering of command reports."""

    JSON = "json"
    TEXT = "text"
    DOT = "dot"


class CheckStatus(StrEnum):
    """Result of a single verification check."""

    PASS = "pass"
    FAIL = "fail"
    LEDGER = "ledger"
    SKIPPED = "skipped"
