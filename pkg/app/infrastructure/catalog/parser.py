"""Parsers for the catalog and weight-table data files."""

import logging
import re
from collections.abc import Callable
from dataclasses import dataclass, field

from app.domain.errors import ParseError
from app.domain.models.catalog import Catalog, CatalogEntry, Expectation, LinkEntry
from app.domain.models.complex import BettiTable
from app.domain.models.crystal import WeightTable, WeightTableRow
from app.domain.value_objects.t_polynomial import TPolynomial

logger = logging.getLogger(__name__)

_HEADER = re.compile(r"^\[([^\]]+)\]$")
_ATTRIBUTE = re.compile(r"^([A-Za-z][\w.]*)\s*=\s*(.*)$")
# One excused cell of a weight table: ledger.NODE.COLUMN = note
_TABLE_LEDGER = re.compile(r"^ledger\.(\d+)\.(word|weight|dim|length)\s*=\s*(.+)$")

# Attributes that may appear once per block.
_SINGLE = frozenset({
    "ring", "node", "suite", "labels", "src", "recipe", "licci", "a", "b",
    "expect.codim", "expect.dim", "expect.h", "expect.gorenstein", "expect.description",
    "expect.twists", "expect.totals", "expect.core.twists", "expect.core.totals",
    "expect.core.h",
})
# Attributes whose lines accumulate.
_REPEATED = frozenset({
    "gen", "emended.gen", "build", "core.gen", "core.build", "alt.gen", "alt.build",
    "seq", "emended.seq",
})
_YES_NO = {"yes": True, "no": False}


@dataclass
class _Block:
    key: str
    line: int
    values: dict[str, str] = field(default_factory=dict)
    lists: dict[str, list[str]] = field(default_factory=dict)
    matrices: dict[str, str] = field(default_factory=dict)
    ledger: dict[str, str] = field(default_factory=dict)


def _blocks(text: str) -> list[_Block]:
    blocks: list[_Block] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header := _HEADER.match(line):
            blocks.append(_Block(header.group(1).strip(), number))
            continue
        match = _ATTRIBUTE.match(line)
        if match is None:
            raise ParseError(f"Line {number}: expected 'name = value', got {line!r}")
        if not blocks:
            raise ParseError(f"Line {number}: attribute outside of any [entry]")
        block, name, value = blocks[-1], match.group(1), match.group(2).strip()
        if name.startswith("matrix."):
            block.matrices[name.removeprefix("matrix.")] = value
        elif name.startswith("ledger."):
            block.ledger[name.removeprefix("ledger.")] = value
        elif name in _REPEATED:
            block.lists.setdefault(name, []).append(value)
        elif name in _SINGLE:
            if name in block.values:
                raise ParseError(f"Line {number}: {name} repeated in [{block.key}]")
            block.values[name] = value
        else:
            raise ParseError(f"Line {number}: unknown attribute {name!r} in [{block.key}]")
    return blocks


def _optional[T](block: _Block, name: str, convert: Callable[[str], T]) -> T | None:
    if name not in block.values:
        return None
    try:
        return convert(block.values[name])
    except (ValueError, ParseError) as exc:
        raise ParseError(f"[{block.key}] {name}: {exc}") from exc


def _yes_no(text: str) -> bool:
    if text not in _YES_NO:
        raise ValueError(f"expected yes or no, got {text!r}")
    return _YES_NO[text]


def _totals(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.split(","))


def _expectation(block: _Block) -> Expectation:
    return Expectation(
        codim=_optional(block, "expect.codim", int),
        dim=_optional(block, "expect.dim", int),
        h=_optional(block, "expect.h", TPolynomial.parse),
        gorenstein=_optional(block, "expect.gorenstein", _yes_no),
        description=block.values.get("expect.description", ""),
        twists=_optional(block, "expect.twists", BettiTable.parse_twists),
        totals=_optional(block, "expect.totals", _totals),
        core_twists=_optional(block, "expect.core.twists", BettiTable.parse_twists),
        core_totals=_optional(block, "expect.core.totals", _totals),
        core_h=_optional(block, "expect.core.h", TPolynomial.parse),
    )


def _entry(block: _Block) -> CatalogEntry:
    if "ring" not in block.values:
        raise ParseError(f"[{block.key}] (line {block.line}) has no ring")
    labels = block.values.get("labels", "")
    if labels not in ("", "indexed"):
        raise ParseError(f"[{block.key}] unknown labels {labels!r}")
    licci = block.values.get("licci", "")
    if licci not in ("", "core"):
        raise ParseError(f"[{block.key}] unknown licci target {licci!r}")
    lists = block.lists
    return CatalogEntry(
        key=block.key,
        ring=block.values["ring"],
        node=_optional(block, "node", int),
        core_suite=block.values.get("suite") == "core",
        indexed=labels == "indexed",
        source=block.values.get("src", ""),
        generators=tuple(lists.get("gen", [])),
        emended=tuple(lists.get("emended.gen", [])),
        builds=tuple(lists.get("build", [])),
        matrices=dict(block.matrices),
        core_generators=tuple(lists.get("core.gen", [])),
        core_builds=tuple(lists.get("core.build", [])),
        alt_generators=tuple(lists.get("alt.gen", [])),
        alt_builds=tuple(lists.get("alt.build", [])),
        recipe=block.values.get("recipe", ""),
        licci_core=licci == "core",
        expect=_expectation(block),
        ledger=dict(block.ledger),
    )


def _link(block: _Block) -> LinkEntry:
    for name in ("a", "b", "seq"):
        if name not in block.values and name not in block.lists:
            raise ParseError(f"[{block.key}] (line {block.line}) has no {name}")
    return LinkEntry(
        key=block.key,
        first=block.values["a"],
        second=block.values["b"],
        sequence=tuple(block.lists["seq"]),
        emended=tuple(block.lists.get("emended.seq", [])),
        source=block.values.get("src", ""),
        ledger=dict(block.ledger),
    )


def parse_catalog(text: str) -> Catalog:
    """Parse catalog text into entries and linkage claims.

    Args:
        text: Contents of a catalog file.

    Returns:
        The Catalog, entries in file order.

    Raises:
        ParseError: On unknown attributes, repeated keys, missing rings or bad values.
    """
    entries: dict[str, CatalogEntry] = {}
    links: dict[str, LinkEntry] = {}
    for block in _blocks(text):
        if block.key in entries or block.key in links:
            raise ParseError(f"Entry [{block.key}] defined twice (line {block.line})")
        if block.key.startswith("link/"):
            links[block.key] = _link(block)
        else:
            entries[block.key] = _entry(block)
    for link in links.values():
        for key in (link.first, link.second):
            if key not in entries:
                raise ParseError(f"{link.key} refers to unknown entry {key}")
    logger.debug("parse_catalog: %d entries, %d links", len(entries), len(links))
    return Catalog(entries, links)


# --- Weight tables ---


def _row(label: str, number: int, line: str) -> WeightTableRow:
    cells = [c.strip() for c in line.split("|")]
    if len(cells) != 7:
        raise ParseError(f"Line {number}: [{label}] rows have 7 columns, got {len(cells)}")
    node, top, bottom, word, _group, gorenstein, dim = cells
    try:
        coords = [int(c) for c in top.split()]
        weight = (coords[0], int(bottom), *coords[1:])
        return WeightTableRow(
            node=int(node),
            weight=weight,
            word="" if word == "e" else word,
            gorenstein=_yes_no(gorenstein),
            dim=int(dim),
        )
    except (ValueError, IndexError) as exc:
        raise ParseError(f"Line {number}: bad row in [{label}]: {exc}") from exc


def parse_weight_tables(text: str) -> list[WeightTable]:
    """Parse weight tables.

    Each row reads ``node | top coordinates | bottom | word | group | yes/no | dim``.
    The top row lists every node but 2 in increasing order and the bottom
    coordinate belongs to node 2, so the stored weight is in node order.
    A line ``ledger.NODE.COLUMN = note`` excuses one printed cell.

    Raises:
        ParseError: If a row or ledger line is malformed or appears outside a section.
    """
    tables: list[tuple[str, dict[tuple[int, str], str], list[WeightTableRow]]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header := _HEADER.match(line):
            tables.append((header.group(1).strip(), {}, []))
            continue
        if not tables:
            raise ParseError(f"Line {number}: row outside of any [table]")
        label, ledger, rows = tables[-1]
        if line.startswith("ledger"):
            match = _TABLE_LEDGER.match(line)
            if match is None:
                raise ParseError(
                    f"Line {number}: ledger lines read 'ledger.NODE.COLUMN = note', got {line!r}"
                )
            ledger[(int(match.group(1)), match.group(2))] = match.group(3).strip()
            continue
        rows.append(_row(label, number, line))
    return [WeightTable(label, tuple(rows), ledger) for label, ledger, rows in tables]
