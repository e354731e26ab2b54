"""Unit tests for Betti tables, structured complexes and resolution checks."""

import pytest

from app.domain.errors import ParseError, RingMismatchError, ValidationError
from app.domain.models.complex import BettiTable, GradedFreeComplex
from app.domain.models.ideal import Ideal
from app.domain.models.matrix import PolyMatrix
from app.domain.models.polynomial import Polynomial
from app.domain.models.ring import AmbientRing
from app.domain.services.catalog import CatalogBuilder
from app.domain.services.complexes import (
    eagon_northcott,
    koszul_betti,
    koszul_complex,
    minimize,
    pfaffian_complex,
    tensor,
    verify_resolution,
)
from app.domain.services.matrices import minors2, submaximal_pfaffians
from app.domain.value_objects.t_polynomial import TPolynomial

SEED = 20201
PRIME = 32003


def _variables(ring: AmbientRing, *names: str) -> list[Polynomial]:
    return [Polynomial.variable(ring, n) for n in names]


def _skew5(ring: AmbientRing) -> PolyMatrix:
    names = iter(ring.variables)
    rows = [[Polynomial.zero(ring)] * 5 for _ in range(5)]
    for i in range(5):
        for j in range(i + 1, 5):
            v = Polynomial.variable(ring, next(names))
            rows[i][j] = v
            rows[j][i] = -v
    return PolyMatrix.from_rows(ring, rows)


def _generic_2xn(ring: AmbientRing, n: int) -> PolyMatrix:
    v = _variables(ring, *ring.variables[: 2 * n])
    return PolyMatrix.from_rows(ring, [v[:n], v[n:]])


def _d_squared_zero(c: GradedFreeComplex) -> bool:
    return all((c.differential(i) @ c.differential(i + 1)).is_zero for i in range(1, c.length))


class TestBettiTable:
    """Tests for the BettiTable model."""

    def test_parse_twists(self) -> None:
        table = BettiTable.parse_twists("0 | 2^5 | 3^5 | 5")
        assert table.totals == (1, 5, 5, 1)
        assert table.twists(2) == [3] * 5
        assert table.length == 3

    def test_twists_text_round_trip(self) -> None:
        text = "0 | 2^5 | 3 4^11 | 5^10 | 6 7"
        assert BettiTable.parse_twists(text).twists_text() == text

    def test_parse_rejects_bad_twist(self) -> None:
        with pytest.raises(ParseError, match="Bad twist"):
            BettiTable.parse_twists("0 | 2^x")

    def test_negative_entry_rejected(self) -> None:
        with pytest.raises(ValidationError, match="Bad Betti entry"):
            BettiTable({(0, 0): -1})

    def test_euler_polynomial(self) -> None:
        table = BettiTable.parse_twists("0 | 2^3 | 3^2")
        assert table.euler_polynomial() == TPolynomial.parse("1-3T^2+2T^3")

    def test_tensor_multiplies_totals(self) -> None:
        a = koszul_betti([1, 1])
        b = koszul_betti([2])
        assert a.tensor(b) == koszul_betti([1, 1, 2])

    def test_display_has_total_row_and_dots(self) -> None:
        text = BettiTable.parse_twists("0 | 2^3 | 3^2").display()
        lines = text.splitlines()
        assert lines[1].split() == ["total:", "1", "3", "2"]
        assert "." in lines[2]

    def test_to_json(self) -> None:
        data = BettiTable.parse_twists("0 | 2^3 | 3^2").to_json()
        assert data["1"] == {"2": 3}
        assert data["total"] == [1, 3, 2]


class TestStructuredComplexes:
    """Tests for Koszul, Pfaffian and Eagon-Northcott complexes."""

    def test_koszul_complex_resolves_the_maximal_ideal(self, xyz: AmbientRing) -> None:
        gens = _variables(xyz, "x", "y", "z")
        c = koszul_complex(gens)
        assert c.ranks == (1, 3, 3, 1)
        assert c.betti() == koszul_betti([1, 1, 1])
        report = verify_resolution(c, Ideal(xyz, tuple(gens)), seed=SEED, prime=PRIME)
        assert report.passed, report.failures

    def test_koszul_rejects_zero_and_empty(self, xyz: AmbientRing) -> None:
        with pytest.raises(ValidationError, match="at least one"):
            koszul_complex([])
        with pytest.raises(ValidationError, match="zero"):
            koszul_complex([Polynomial.variable(xyz, "x"), Polynomial.zero(xyz)])

    def test_koszul_rejects_inhomogeneous(self, xyz: AmbientRing) -> None:
        with pytest.raises(ValidationError, match="not homogeneous"):
            koszul_complex([Polynomial.parse("x + y^2", xyz)])

    def test_pfaffian_complex_of_generic_5x5(self, ten: AmbientRing) -> None:
        m = _skew5(ten)
        c = pfaffian_complex(m)
        assert c.betti() == BettiTable.parse_twists("0 | 2^5 | 3^5 | 5")
        assert _d_squared_zero(c)
        ideal = Ideal(ten, tuple(submaximal_pfaffians(m)))
        report = verify_resolution(c, ideal, seed=SEED, prime=PRIME)
        assert report.passed, report.failures

    def test_pfaffian_complex_needs_odd_size(self, abcdef: AmbientRing) -> None:
        m = PolyMatrix.parse("0, a; -a, 0", abcdef)
        with pytest.raises(ValidationError, match="odd size"):
            pfaffian_complex(m)

    def test_eagon_northcott_2x3(self, abcdef: AmbientRing) -> None:
        m = _generic_2xn(abcdef, 3)
        c = eagon_northcott(m)
        assert c.ranks == (1, 3, 2)
        report = verify_resolution(c, Ideal(abcdef, tuple(minors2(m))), seed=SEED, prime=PRIME)
        assert report.passed, report.failures

    def test_eagon_northcott_2x4(self, ten: AmbientRing) -> None:
        m = _generic_2xn(ten, 4)
        c = eagon_northcott(m)
        assert c.betti() == BettiTable.parse_twists("0 | 2^6 | 3^8 | 4^3")
        assert _d_squared_zero(c)

    def test_eagon_northcott_2x5_is_exact(self, ten: AmbientRing) -> None:
        m = _generic_2xn(ten, 5)
        c = eagon_northcott(m)
        assert c.ranks == (1, 10, 20, 15, 4)
        report = verify_resolution(c, Ideal(ten, tuple(minors2(m))), seed=SEED, prime=PRIME)
        assert report.passed, report.failures

    def test_eagon_northcott_needs_two_rows(self, abcdef: AmbientRing) -> None:
        with pytest.raises(ValidationError, match="2 x n"):
            eagon_northcott(PolyMatrix.parse("a, b, c", abcdef))

    def test_tensor_of_koszul_complexes(self, xyz: AmbientRing) -> None:
        x, y, z = _variables(xyz, "x", "y", "z")
        c = tensor(koszul_complex([x, y]), koszul_complex([z]))
        assert c.betti() == koszul_betti([1, 1, 1])
        assert _d_squared_zero(c)
        report = verify_resolution(c, Ideal(xyz, (x, y, z)), seed=SEED, prime=PRIME)
        assert report.passed, report.failures

    def test_tensor_ring_mismatch(self, xyz: AmbientRing, abcdef: AmbientRing) -> None:
        with pytest.raises(RingMismatchError):
            tensor(
                koszul_complex(_variables(xyz, "x")),
                koszul_complex(_variables(abcdef, "a")),
            )


class TestMinimize:
    """Tests for splitting off unit entries."""

    def test_minimal_complex_is_unchanged(self, xyz: AmbientRing) -> None:
        c = koszul_complex(_variables(xyz, "x", "y"))
        assert minimize(c).betti() == c.betti()

    def test_trivial_summand_is_split_off(self, xyz: AmbientRing) -> None:
        x = Polynomial.variable(xyz, "x")
        one = Polynomial.constant(xyz, 1)
        d1 = PolyMatrix.from_rows(xyz, [[x, x]])
        d2 = PolyMatrix.from_rows(xyz, [[one], [-one]])
        c = GradedFreeComplex(xyz, ((0,), (1, 1), (1,)), (d1, d2))
        result = minimize(c)
        assert result.betti() == BettiTable.parse_twists("0 | 1")
        assert result.differential(1).get(0, 0) == x


class TestVerifyResolution:
    """Tests for the exactness certificate."""

    def test_wrong_complex_fails(self, xyz: AmbientRing) -> None:
        x, y, z = _variables(xyz, "x", "y", "z")
        report = verify_resolution(
            koszul_complex([x, y]), Ideal(xyz, (x, y, z)), seed=SEED, prime=PRIME
        )
        assert not report.passed
        assert "euler_matches" in report.failures
        assert "generates_ideal" in report.failures

    def test_ring_mismatch(self, xyz: AmbientRing, abcdef: AmbientRing) -> None:
        c = koszul_complex(_variables(xyz, "x"))
        with pytest.raises(RingMismatchError):
            verify_resolution(
                c, Ideal(abcdef, tuple(_variables(abcdef, "a"))), seed=SEED, prime=PRIME
            )

    def test_needs_a_point(self, xyz: AmbientRing) -> None:
        gens = _variables(xyz, "x")
        with pytest.raises(ValidationError, match="random point"):
            verify_resolution(
                koszul_complex(gens), Ideal(xyz, tuple(gens)), seed=SEED, prime=PRIME, points=0
            )

    def test_records_seed_and_prime(self, xyz: AmbientRing) -> None:
        gens = _variables(xyz, "x", "y")
        report = verify_resolution(
            koszul_complex(gens), Ideal(xyz, tuple(gens)), seed=7, prime=101, points=2
        )
        assert report.seed == 7
        assert report.prime == 101
        assert len(report.ranks) == 2


class TestRecipes:
    """Structured resolutions of catalog entries."""

    def test_recipe_betti_of_a_long_tensor_product(self, builder: CatalogBuilder) -> None:
        assert builder.recipe_betti("E6/I14").totals == (1, 10, 40, 86, 110, 86, 40, 10, 1)

    def test_recipe_betti_matches_built_complex(self, builder: CatalogBuilder) -> None:
        assert builder.recipe_complex("E6/I23").betti() == builder.recipe_betti("E6/I23")

    def test_recipe_resolves_its_ideal(self, builder: CatalogBuilder) -> None:
        report = verify_resolution(
            builder.recipe_complex("E6/I23"), builder.ideal("E6/I23"), seed=SEED, prime=PRIME
        )
        assert report.passed, report.failures

    def test_eagon_northcott_recipe(self, builder: CatalogBuilder) -> None:
        assert builder.recipe_betti("E6/I19").totals == (1, 10, 38, 75, 85, 56, 20, 3)
