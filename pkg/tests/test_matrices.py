"""Unit tests for polynomial matrices, Pfaffians and minors."""

import random

import pytest
import sympy

from app.domain.errors import ParseError, RingMismatchError, ValidationError
from app.domain.models.matrix import PolyMatrix
from app.domain.models.polynomial import Polynomial
from app.domain.models.ring import AmbientRing
from app.domain.services.matrices import (
    determinant,
    minors2,
    pfaffian,
    principal_pfaffians,
    product_entries,
    submaximal_pfaffians,
    variety_of_complexes,
)

SKEW_4 = "0, a, b, c; -a, 0, d, e; -b, -d, 0, f; -c, -e, -f, 0"


def _skew(ring: AmbientRing, size: int) -> PolyMatrix:
    """Generic skew matrix with distinct variables above the diagonal."""
    names = iter(ring.variables)
    rows = [[Polynomial.zero(ring)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            v = Polynomial.variable(ring, next(names))
            rows[i][j] = v
            rows[j][i] = -v
    return PolyMatrix.from_rows(ring, rows)


def _linear(ring: AmbientRing, rng: random.Random) -> str:
    coefficient = rng.choice([-3, -2, -1, 1, 2, 3])
    return f"{coefficient}*{rng.choice(ring.variables)} + {rng.randint(0, 3)}"


class TestPolyMatrix:
    """Tests for the PolyMatrix model."""

    def test_parse_drops_zero_entries(self, abcdef: AmbientRing) -> None:
        m = PolyMatrix.parse(SKEW_4, abcdef)
        assert m.shape == (4, 4)
        assert len(m.entries) == 12
        assert m.get(0, 0).is_zero

    def test_parse_rejects_ragged_rows(self, abcdef: AmbientRing) -> None:
        with pytest.raises(ParseError, match="Ragged"):
            PolyMatrix.parse("a, b; c", abcdef)

    def test_parse_rejects_empty_text(self, abcdef: AmbientRing) -> None:
        with pytest.raises(ParseError, match="Empty"):
            PolyMatrix.parse(" ; ", abcdef)

    def test_skew_symmetry(self, abcdef: AmbientRing) -> None:
        assert PolyMatrix.parse(SKEW_4, abcdef).is_skew_symmetric()
        assert not PolyMatrix.parse("0, a; a, 0", abcdef).is_skew_symmetric()
        assert not PolyMatrix.parse("a, b, c; d, e, f", abcdef).is_skew_symmetric()

    def test_transpose_and_product(self, abcdef: AmbientRing) -> None:
        m = PolyMatrix.parse("a, b, c; d, e, f", abcdef)
        gram = m @ m.transpose()
        assert gram.shape == (2, 2)
        assert gram.get(0, 1) == Polynomial.parse("a*d + b*e + c*f", abcdef)

    def test_product_shape_mismatch(self, abcdef: AmbientRing) -> None:
        m = PolyMatrix.parse("a, b, c; d, e, f", abcdef)
        with pytest.raises(ValidationError, match="Cannot multiply"):
            _ = m @ m

    def test_product_ring_mismatch(self, abcdef: AmbientRing, xyz: AmbientRing) -> None:
        with pytest.raises(RingMismatchError):
            _ = PolyMatrix.parse("a", abcdef) @ PolyMatrix.parse("x", xyz)


class TestPfaffians:
    """Tests for Pfaffians of skew-symmetric matrices."""

    def test_four_by_four(self, abcdef: AmbientRing) -> None:
        m = PolyMatrix.parse(SKEW_4, abcdef)
        assert pfaffian(m) == Polynomial.parse("a*f - b*e + c*d", abcdef)

    def test_pfaffian_squared_is_determinant(self, abcdef: AmbientRing) -> None:
        m = PolyMatrix.parse(SKEW_4, abcdef)
        assert pfaffian(m) ** 2 == determinant(m)

    def test_pfaffian_squared_is_determinant_on_random_matrices(self, xyz: AmbientRing) -> None:
        rng = random.Random(32003)
        for _ in range(100):
            size = rng.choice([2, 4, 6, 8])
            rows = [[Polynomial.zero(xyz)] * size for _ in range(size)]
            for i in range(size):
                for j in range(i + 1, size):
                    entry = Polynomial.parse(_linear(xyz, rng), xyz)
                    rows[i][j] = entry
                    rows[j][i] = -entry
            m = PolyMatrix.from_rows(xyz, rows)
            assert pfaffian(m) ** 2 == determinant(m)

    def test_odd_size_rejected(self, ten: AmbientRing) -> None:
        with pytest.raises(ValidationError, match="even size"):
            pfaffian(_skew(ten, 5))

    def test_non_skew_rejected(self, abcdef: AmbientRing) -> None:
        with pytest.raises(ValidationError, match="not skew-symmetric"):
            pfaffian(PolyMatrix.parse("a, b; c, d", abcdef))

    def test_submaximal_pfaffians_annihilate_the_matrix(self, ten: AmbientRing) -> None:
        m = _skew(ten, 5)
        p = submaximal_pfaffians(m)
        assert len(p) == 5
        assert all(g.homogeneous_degree == 2 for g in p)
        row = PolyMatrix.from_rows(ten, [p])
        assert (row @ m).is_zero

    def test_submaximal_pfaffians_need_odd_size(self, abcdef: AmbientRing) -> None:
        with pytest.raises(ValidationError, match="odd size"):
            submaximal_pfaffians(PolyMatrix.parse(SKEW_4, abcdef))

    def test_principal_pfaffians(self, ten: AmbientRing) -> None:
        m = _skew(ten, 5)
        assert len(principal_pfaffians(m, 4)) == 5
        assert len(principal_pfaffians(m, 2)) == 10
        with pytest.raises(ValidationError, match="Cannot take"):
            principal_pfaffians(m, 3)


class TestMinorsAndDeterminants:
    """Tests for 2x2 minors, determinants and matrix-product ideals."""

    def test_minors2_of_a_generic_matrix(self, abcdef: AmbientRing) -> None:
        m = PolyMatrix.parse("a, b, c; d, e, f", abcdef)
        assert minors2(m) == [
            Polynomial.parse("a*e - b*d", abcdef),
            Polynomial.parse("a*f - c*d", abcdef),
            Polynomial.parse("b*f - c*e", abcdef),
        ]

    def test_minors2_omits_zeros(self, abcdef: AmbientRing) -> None:
        m = PolyMatrix.parse("a, 2*a, b; c, 2*c, d", abcdef)
        assert len(minors2(m)) == 2

    def test_minors2_needs_two_rows(self, abcdef: AmbientRing) -> None:
        with pytest.raises(ValidationError, match="2 x n"):
            minors2(PolyMatrix.parse("a, b, c", abcdef))

    def test_determinant_needs_square(self, abcdef: AmbientRing) -> None:
        with pytest.raises(ValidationError, match="non-square"):
            determinant(PolyMatrix.parse("a, b, c; d, e, f", abcdef))

    def test_determinant_agrees_with_sympy(self, abcdef: AmbientRing) -> None:
        rng = random.Random(5)
        symbols = sympy.symbols(abcdef.variables)
        for _ in range(5):
            texts = [[_linear(abcdef, rng) for _ in range(3)] for _ in range(3)]
            ours = determinant(PolyMatrix.parse("; ".join(", ".join(r) for r in texts), abcdef))
            local = dict(zip(abcdef.variables, symbols, strict=True))
            theirs = sympy.Matrix([[sympy.sympify(t, locals=local) for t in r] for r in texts])
            expected = sympy.expand(theirs.det())
            if expected == 0:
                assert ours.is_zero
            else:
                text = str(expected).replace("**", "^")
                assert ours == Polynomial.parse(text, abcdef)

    def test_product_entries_row_major(self, abcdef: AmbientRing) -> None:
        x = PolyMatrix.parse("a, b", abcdef)
        y = PolyMatrix.parse("c, 0; d, e", abcdef)
        assert product_entries(x, y) == [
            Polynomial.parse("a*c + b*d", abcdef),
            Polynomial.parse("b*e", abcdef),
        ]

    def test_variety_of_complexes(self, abcdef: AmbientRing) -> None:
        x = PolyMatrix.parse("a, b", abcdef)
        y = PolyMatrix.parse("c, d; e, f", abcdef)
        gens = variety_of_complexes(x, y)
        assert gens == [
            Polynomial.parse("a*c + b*e", abcdef),
            Polynomial.parse("a*d + b*f", abcdef),
            Polynomial.parse("c*f - d*e", abcdef),
        ]

    def test_variety_of_complexes_needs_two_columns(self, abcdef: AmbientRing) -> None:
        with pytest.raises(ValidationError, match="2 columns"):
            variety_of_complexes(PolyMatrix.parse("a", abcdef), PolyMatrix.parse("b", abcdef))
