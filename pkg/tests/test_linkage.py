"""Unit tests for regular sequences, linkage and the licci criterion."""

import random

import pytest

from app.domain.enums import LicciVerdict, Variant
from app.domain.errors import PreconditionError, RingMismatchError, ValidationError
from app.domain.models.catalog import Catalog
from app.domain.models.complex import BettiTable
from app.domain.models.ideal import Ideal
from app.domain.models.polynomial import Polynomial
from app.domain.models.ring import AmbientRing
from app.domain.services.catalog import CatalogBuilder
from app.domain.services.complexes import koszul_betti
from app.domain.services.linkage import (
    check_linked,
    codimension,
    is_regular_sequence,
    licci_criterion,
)
from app.domain.services.resolution import minimal_betti


def _polys(ring: AmbientRing, *texts: str) -> list[Polynomial]:
    return [Polynomial.parse(t, ring) for t in texts]


def _ideal(ring: AmbientRing, *texts: str, name: str = "") -> Ideal:
    return Ideal(ring, tuple(_polys(ring, *texts)), name)


class TestRegularSequence:
    """Tests for codimension and regular sequences."""

    def test_codimension(self, xyz: AmbientRing) -> None:
        assert codimension(_ideal(xyz, "x", "y")) == 2
        assert codimension(_ideal(xyz, "x*y", "x*z")) == 1

    def test_variables_are_regular(self, xyz: AmbientRing) -> None:
        assert is_regular_sequence(_polys(xyz, "x", "y^2", "z^3"))

    def test_zero_divisor_breaks_regularity(self, xyz: AmbientRing) -> None:
        assert not is_regular_sequence(_polys(xyz, "x*y", "x*z"))

    def test_empty_sequence_is_regular(self) -> None:
        assert is_regular_sequence([])

    def test_mixed_rings(self, xyz: AmbientRing, abcdef: AmbientRing) -> None:
        with pytest.raises(RingMismatchError):
            is_regular_sequence([Polynomial.variable(xyz, "x"), Polynomial.variable(abcdef, "a")])


class TestCheckLinked:
    """Tests for check_linked on small ideals."""

    def test_maximal_ideal_and_its_square_residual(self, xyz: AmbientRing) -> None:
        first = _ideal(xyz, "x", "y", name="m")
        second = _ideal(xyz, "x^2", "x*y", "y^2", name="m2")
        report = check_linked(first, second, _polys(xyz, "x^2", "y^2"))
        assert report.linked
        assert report.first == "m"
        assert report.second == "m2"

    def test_wrong_partner_is_not_linked(self, xyz: AmbientRing) -> None:
        first = _ideal(xyz, "x", "y")
        report = check_linked(first, first, _polys(xyz, "x^2", "y^2"))
        assert report.regular_sequence_ok
        assert not report.colon_forward_ok
        assert not report.linked

    def test_sequence_outside_an_ideal(self, xyz: AmbientRing) -> None:
        with pytest.raises(PreconditionError, match="does not lie in"):
            check_linked(_ideal(xyz, "x"), _ideal(xyz, "y"), _polys(xyz, "x"))

    def test_empty_sequence(self, xyz: AmbientRing) -> None:
        with pytest.raises(ValidationError, match="empty"):
            check_linked(_ideal(xyz, "x"), _ideal(xyz, "x"), [])

    def test_rings_must_agree(self, xyz: AmbientRing, abcdef: AmbientRing) -> None:
        with pytest.raises(RingMismatchError):
            check_linked(_ideal(xyz, "x"), _ideal(abcdef, "a"), _polys(xyz, "x"))


class TestCatalogLink:
    """The stored link between the almost complete intersection and the Pfaffian entry."""

    def test_emended_sequence_links(self, builder: CatalogBuilder, catalog: Catalog) -> None:
        link = catalog.link("link/E6/I22-I23")
        report = check_linked(
            builder.ideal(link.first),
            builder.ideal(link.second),
            builder.link_sequence(link, Variant.EMENDED),
        )
        assert report.linked
        assert len(report.sequence) == 4


class TestLicciCriterion:
    """Tests for the twist criterion ruling out licci."""

    def test_rules_out_when_last_twists_are_small(self) -> None:
        table = BettiTable.parse_twists("0 | 2^6 | 3^8 | 4^3")
        assert licci_criterion(table, 3) is LicciVerdict.NOT_LICCI

    def test_inconclusive_for_complete_intersections(self) -> None:
        table = BettiTable.parse_twists("0 | 1^3 | 2^3 | 3")
        assert licci_criterion(table, 3) is LicciVerdict.INCONCLUSIVE

    def test_inconclusive_when_a_last_twist_is_large(self) -> None:
        table = BettiTable.parse_twists("0 | 2^5 | 3 4^11 | 5^10 | 6 7")
        assert licci_criterion(table, 4) is LicciVerdict.INCONCLUSIVE

    def test_needs_perfect_ideal(self) -> None:
        with pytest.raises(PreconditionError, match="criterion does not apply"):
            licci_criterion(BettiTable.parse_twists("0 | 2^3 | 3^2"), 3)

    def test_complete_intersections_stay_inconclusive(self) -> None:
        rng = random.Random(20201)
        for _ in range(50):
            degrees = [rng.randint(1, 5) for _ in range(rng.randint(1, 6))]
            table = koszul_betti(degrees)
            assert licci_criterion(table, len(degrees)) is LicciVerdict.INCONCLUSIVE, degrees


@pytest.mark.slow
class TestCatalogLicci:
    """Cores whose resolutions rule out licci."""

    @pytest.mark.parametrize(
        ("key", "totals"),
        [("E6/I20", (1, 7, 11, 8, 3)), ("E6/I13", (1, 8, 12, 7, 2))],
    )
    def test_core_is_not_licci(
        self, builder: CatalogBuilder, key: str, totals: tuple[int, ...]
    ) -> None:
        core = builder.core_ideal(key)
        assert core is not None
        betti = minimal_betti(core, 8)
        assert codimension(core) == 4
        assert betti.totals == totals
        assert max(betti.twists(4)) == 6
        assert min(betti.twists(1)) == 2
        assert licci_criterion(betti, 4) is LicciVerdict.NOT_LICCI
