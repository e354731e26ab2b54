"""Unit tests for the catalog and weight-table parsers."""

import pytest

from app.domain.errors import ParseError
from app.domain.models.catalog import Catalog
from app.domain.models.complex import BettiTable
from app.domain.models.crystal import WeightTable
from app.domain.value_objects.t_polynomial import TPolynomial
from app.infrastructure.catalog.parser import parse_catalog, parse_weight_tables

SMALL_CATALOG = """
# two entries and a link
[E6/I26]
ring = E6D5
node = 26
gen = -y1234*y15 + y1235*y14 - y1245*y13 + y1345*y12
recipe = koszul(gen)
expect.codim = 1
expect.h = 1+T
expect.gorenstein = yes
expect.twists = 0 | 2

[E6/I25]
ring = E6D5
node = 25
suite = core
gen = -y1234*y15 + y1235*y14 - y1245*y13 + y1345*y12
gen = -y1234*y25 + y1235*y24 - y1245*y23 + y2345*y12
matrix.N = y12, y13; y14, y15
ledger.h = printed with a slip
expect.totals = 1,2,1

[link/E6/I26-I25]
a = E6/I26
b = E6/I25
seq = y12
emended.seq = y13
"""

SMALL_TABLE = """
[E6/w1]
1 | 1 0 0 0 0 | 0 | e | E_6 | yes | 0
2 | -1 1 0 0 0 | 0 | 1 | D_5 | yes | 1

[E7/w7]
ledger.1.weight = slip
1 | 0 0 0 0 0 1 | 0 | e | E_7 | yes | 0
"""


class TestParseCatalog:
    """Tests for parse_catalog."""

    def test_entries_and_expectations(self) -> None:
        catalog = parse_catalog(SMALL_CATALOG)
        entry = catalog.entry("E6/I26")
        assert entry.ring == "E6D5"
        assert entry.node == 26
        assert entry.family == "E6"
        assert entry.recipe == "koszul(gen)"
        assert entry.expect.h == TPolynomial.parse("1+T")
        assert entry.expect.gorenstein is True
        assert entry.expect.twists == BettiTable.parse_twists("0 | 2")

    def test_repeated_lines_accumulate(self) -> None:
        entry = parse_catalog(SMALL_CATALOG).entry("E6/I25")
        assert len(entry.generators) == 2
        assert entry.core_suite
        assert entry.matrices == {"N": "y12, y13; y14, y15"}
        assert entry.ledger == {"h": "printed with a slip"}
        assert entry.expect.totals == (1, 2, 1)

    def test_links(self) -> None:
        catalog = parse_catalog(SMALL_CATALOG)
        link = catalog.link("link/E6/I26-I25")
        assert (link.first, link.second) == ("E6/I26", "E6/I25")
        assert link.sequence == ("y12",)
        assert link.emended == ("y13",)
        assert catalog.link_between("E6/I25", "E6/I26") is link

    def test_duplicate_entry(self) -> None:
        text = "[E6/I1]\nring = E6D5\n[E6/I1]\nring = E6D5\n"
        with pytest.raises(ParseError, match="defined twice"):
            parse_catalog(text)

    def test_unknown_attribute(self) -> None:
        with pytest.raises(ParseError, match="unknown attribute"):
            parse_catalog("[E6/I1]\nring = E6D5\ncolour = blue\n")

    def test_repeated_single_attribute(self) -> None:
        with pytest.raises(ParseError, match="repeated"):
            parse_catalog("[E6/I1]\nring = E6D5\nnode = 1\nnode = 2\n")

    def test_missing_ring(self) -> None:
        with pytest.raises(ParseError, match="has no ring"):
            parse_catalog("[E6/I1]\nnode = 1\n")

    def test_attribute_outside_entry(self) -> None:
        with pytest.raises(ParseError, match="outside"):
            parse_catalog("ring = E6D5\n")

    def test_malformed_line(self) -> None:
        with pytest.raises(ParseError, match="expected 'name = value'"):
            parse_catalog("[E6/I1]\nring E6D5\n")

    def test_bad_expectation_value(self) -> None:
        with pytest.raises(ParseError, match="expect.gorenstein"):
            parse_catalog("[E6/I1]\nring = E6D5\nexpect.gorenstein = maybe\n")

    def test_link_to_unknown_entry(self) -> None:
        text = "[E6/I1]\nring = E6D5\n[link/x]\na = E6/I1\nb = E6/I9\nseq = y12\n"
        with pytest.raises(ParseError, match="unknown entry E6/I9"):
            parse_catalog(text)


class TestPackagedCatalog:
    """Shape of the packaged catalog."""

    def test_entry_counts(self, catalog: Catalog) -> None:
        families = [catalog.entry(k).family for k in catalog.ideal_keys()]
        assert families.count("E6") == 27
        assert families.count("E7") == 55
        assert len(catalog.links) == 2

    def test_cubics_and_derivatives_are_present(self, catalog: Catalog) -> None:
        for key in ("cubic/E7", "derivatives/E7", "cubic/E6D5", "derivatives/E6D5"):
            assert not catalog.entry(key).is_ideal

    def test_every_e6_node_appears_once(self, catalog: Catalog) -> None:
        nodes = sorted(
            catalog.entry(k).node or 0 for k in catalog.ideal_keys() if k.startswith("E6/")
        )
        assert nodes == list(range(1, 28))

    def test_emended_lines_carry_ledger_notes(self, catalog: Catalog) -> None:
        for entry in catalog.entries.values():
            if entry.emended:
                assert entry.ledger, entry.key
        for link in catalog.links.values():
            if link.emended:
                assert "seq" in link.ledger, link.key


class TestParseWeightTables:
    """Tests for parse_weight_tables."""

    def test_rows_are_stored_in_node_order(self) -> None:
        tables = parse_weight_tables(SMALL_TABLE)
        assert [t.label for t in tables] == ["E6/w1", "E7/w7"]
        row = tables[0].row(2)
        assert row.weight == (-1, 0, 1, 0, 0, 0)
        assert row.word == "1"
        assert row.dim == 1
        assert tables[0].row(1).word == ""

    def test_ledger(self) -> None:
        tables = parse_weight_tables(SMALL_TABLE)
        assert tables[0].ledger == {}
        assert tables[1].ledger == {(1, "weight"): "slip"}
        assert tables[1].note(1, "weight") == "slip"
        assert tables[1].note(1, "word") == ""

    def test_ledger_without_cell(self) -> None:
        with pytest.raises(ParseError, match="ledger.NODE.COLUMN"):
            parse_weight_tables("[E7/w7]\nledger = slips\n")

    def test_wrong_column_count(self) -> None:
        with pytest.raises(ParseError, match="7 columns"):
            parse_weight_tables("[E6/w1]\n1 | 1 0 0 0 0 | 0 | e | yes | 0\n")

    def test_bad_number(self) -> None:
        with pytest.raises(ParseError, match="bad row"):
            parse_weight_tables("[E6/w1]\n1 | 1 0 a 0 0 | 0 | e | E_6 | yes | 0\n")

    def test_row_outside_table(self) -> None:
        with pytest.raises(ParseError, match="outside"):
            parse_weight_tables("1 | 1 0 0 0 0 | 0 | e | E_6 | yes | 0\n")

    def test_packaged_tables(self, weight_tables: list[WeightTable]) -> None:
        sizes = {t.label: len(t.rows) for t in weight_tables}
        assert sizes == {"E6/w1": 27, "E7/w7": 56}
