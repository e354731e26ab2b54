"""Unit tests for Hilbert series, h-vectors and Hilbert function prefixes."""

import pytest

from app.domain.errors import PreconditionError, ValidationError
from app.domain.models.ideal import Ideal, MonomialIdeal
from app.domain.models.polynomial import Polynomial
from app.domain.models.ring import AmbientRing
from app.domain.services.catalog import CatalogBuilder
from app.domain.services.groebner import unit_ideal
from app.domain.services.hilbert import (
    complete_intersection_h,
    hilbert_function_prefix,
    hilbert_numerator,
    hilbert_series,
)
from app.domain.value_objects.t_polynomial import TPolynomial


def _ideal(ring: AmbientRing, *texts: str) -> Ideal:
    return Ideal(ring, tuple(Polynomial.parse(t, ring) for t in texts))


class TestHilbertNumerator:
    """Tests for the monomial-ideal numerator."""

    def test_single_variable(self) -> None:
        ideal = MonomialIdeal.from_monomials(3, [(1, 0, 0)])
        assert hilbert_numerator(ideal) == TPolynomial.parse("1-T")

    def test_coprime_generators_multiply(self) -> None:
        ideal = MonomialIdeal.from_monomials(3, [(2, 0, 0), (0, 1, 1)])
        assert hilbert_numerator(ideal) == TPolynomial.parse("1-T^2") * TPolynomial.parse(
            "1-T^2"
        )

    def test_zero_ideal(self) -> None:
        assert hilbert_numerator(MonomialIdeal(3, ())) == TPolynomial.one()


class TestHilbertSeries:
    """Tests for hilbert_series on small ideals."""

    def test_hypersurface(self, xyz: AmbientRing) -> None:
        data = hilbert_series(_ideal(xyz, "x^3 - y*z^2"))
        assert data.dim == 2
        assert data.codim == 1
        assert data.h_vector == TPolynomial.parse("1+T+T^2")
        assert data.degree == 3

    def test_complete_intersection_matches_formula(self, xyz: AmbientRing) -> None:
        data = hilbert_series(_ideal(xyz, "x^2 - y*z", "y^3 - z^3"))
        assert data.h_vector == complete_intersection_h([2, 3])
        assert data.is_palindromic

    def test_twisted_cubic(self, abcdef: AmbientRing) -> None:
        data = hilbert_series(_ideal(abcdef, "a*c - b^2", "a*d - b*c", "b*d - c^2"))
        assert data.codim == 2
        assert data.h_vector == TPolynomial.parse("1+2T")

    def test_zero_ideal_is_the_whole_ring(self, xyz: AmbientRing) -> None:
        data = hilbert_series(Ideal(xyz, ()))
        assert data.codim == 0
        assert data.h_vector == TPolynomial.one()

    def test_unit_ideal_is_rejected(self, xyz: AmbientRing) -> None:
        with pytest.raises(PreconditionError, match="unit ideal"):
            hilbert_series(unit_ideal(xyz))

    def test_complete_intersection_h(self) -> None:
        assert complete_intersection_h([2, 2, 2]) == TPolynomial.parse("1+3T+3T^2+T^3")
        assert complete_intersection_h([]) == TPolynomial.one()


class TestHilbertFunctionPrefix:
    """Tests for counting standard monomials degree by degree."""

    def test_monomial_hypersurface(self, xyz: AmbientRing) -> None:
        assert hilbert_function_prefix(_ideal(xyz, "x*y"), 3) == [1, 3, 5, 7]

    def test_agrees_with_series_expansion(self, xyz: AmbientRing) -> None:
        ideal = _ideal(xyz, "x^2 - y*z", "x*y^2 - z^3")
        data = hilbert_series(ideal)
        assert hilbert_function_prefix(ideal, 6) == data.h_vector.series_prefix(data.dim, 6)

    def test_negative_degree(self, xyz: AmbientRing) -> None:
        with pytest.raises(ValidationError, match="non-negative"):
            hilbert_function_prefix(_ideal(xyz, "x"), -1)


class TestCatalogHilbertSeries:
    """Hilbert series of catalog ideals against the printed values."""

    @pytest.mark.parametrize(
        ("key", "codim", "h"),
        [
            ("E6/I26", 1, "1+T"),
            ("E6/I25", 2, "1+2T+T^2"),
            ("E6/I24", 3, "1+3T+3T^2+T^3"),
            ("E6/I23", 4, "1+3T+T^2"),
            ("E6/I22", 4, "1+4T+5T^2+T^3"),
            ("E6/I18", 8, "1"),
        ],
    )
    def test_e6_entries(self, builder: CatalogBuilder, key: str, codim: int, h: str) -> None:
        data = hilbert_series(builder.ideal(key))
        assert data.codim == codim
        assert data.h_vector == TPolynomial.parse(h)

    def test_almost_complete_intersection_is_not_gorenstein(self, builder: CatalogBuilder) -> None:
        assert not hilbert_series(builder.ideal("E6/I22")).is_palindromic

    def test_cell_quadrics(self, builder: CatalogBuilder) -> None:
        data = hilbert_series(builder.ideal("E6/I17"))
        assert data.codim == 5
        assert data.h_vector == TPolynomial.parse("1+5T+5T^2+T^3")

    def test_variety_of_complexes_has_codim_six(self, builder: CatalogBuilder) -> None:
        # printed codimension 16 is a slip recorded in the ledger
        data = hilbert_series(builder.ideal("E6/I20"))
        assert data.codim == 6
        assert data.h_vector == TPolynomial.parse("1+4T+3T^2")

    def test_prefix_of_catalog_ideal_matches_series(self, builder: CatalogBuilder) -> None:
        ideal = builder.ideal("E6/I23")
        data = hilbert_series(ideal)
        assert hilbert_function_prefix(ideal, 4) == data.h_vector.series_prefix(data.dim, 4)

    def test_j30_is_a_complete_intersection_over_minors(self, builder: CatalogBuilder) -> None:
        # twelve variables plus the 2x2 minors of a 2x5 matrix
        data = hilbert_series(builder.ideal("E7/J30"))
        assert data.codim == 16
        assert data.dim == 11
        assert data.h_vector == TPolynomial.parse("1+4T")
