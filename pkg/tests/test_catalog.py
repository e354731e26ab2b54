"""Tests for building polynomials, matrices and ideals from the packaged catalog."""

import pytest

from app.domain.enums import Labelling, Variant
from app.domain.errors import NotFoundError, ParseError
from app.domain.models.polynomial import Polynomial
from app.domain.services.catalog import CatalogBuilder, cell_specialize
from app.domain.services.groebner import ideals_equal, over_field


def _partial_mismatches(
    builder: CatalogBuilder, labelling: Labelling, variant: Variant
) -> list[int]:
    cubic = builder.cubic(labelling)
    listed = builder.derivatives(labelling, variant)
    ring = cubic.ring
    return [
        i
        for i in range(1, ring.nvars + 1)
        if listed.get(i) != cubic.partial_derivative(ring.variables[i - 1])
    ]


class TestCubicAndDerivatives:
    """The cubic invariant and its listed partial derivatives."""

    def test_cubic_is_homogeneous_of_degree_three(self, builder: CatalogBuilder) -> None:
        for labelling in Labelling:
            cubic = builder.cubic(labelling)
            assert cubic.homogeneous_degree == 3
            assert cubic.ring.nvars == 27

    def test_e7_derivatives_are_the_partials(self, builder: CatalogBuilder) -> None:
        assert _partial_mismatches(builder, Labelling.E7, Variant.EMENDED) == []

    def test_last_e7_derivative(self, builder: CatalogBuilder) -> None:
        ring = builder.ring("E7")
        expected = Polynomial.parse(
            "x5*x6 - x4*x8 + x3*x10 - x2*x12 + x1*x15", ring, indexed=True
        )
        assert builder.derivative(Labelling.E7, 27) == expected

    def test_emended_e6_derivatives_are_the_partials(self, builder: CatalogBuilder) -> None:
        assert _partial_mismatches(builder, Labelling.E6D5, Variant.EMENDED) == []

    def test_printed_e6_derivatives_carry_slips(self, builder: CatalogBuilder) -> None:
        printed = _partial_mismatches(builder, Labelling.E6D5, Variant.PRINTED)
        assert printed

    @pytest.mark.parametrize("labelling", list(Labelling))
    def test_euler_identity(self, builder: CatalogBuilder, labelling: Labelling) -> None:
        cubic = builder.cubic(labelling)
        ring = cubic.ring
        listed = builder.derivatives(labelling)
        total = Polynomial.zero(ring)
        for i, name in enumerate(ring.variables, start=1):
            total = total + Polynomial.variable(ring, name) * listed[i]
        assert total == cubic.scalar_mul(3)

    def test_unknown_derivative(self, builder: CatalogBuilder) -> None:
        with pytest.raises(NotFoundError, match="No derivative f28"):
            builder.derivative(Labelling.E7, 28)


class TestIdeals:
    """Catalog ideals built from tokens, matrices and cell restrictions."""

    def test_cubic_token(self, builder: CatalogBuilder) -> None:
        ideal = builder.ideal("E7/J55")
        assert ideal.generators == (builder.cubic(Labelling.E7),)
        assert ideal.name == "E7/J55"

    def test_derivative_tokens(self, builder: CatalogBuilder) -> None:
        ideal = builder.ideal("E7/J54")
        assert [g.homogeneous_degree for g in ideal.generators] == [3, 2]

    def test_ranges_of_derivatives_and_variables(self, builder: CatalogBuilder) -> None:
        ideal = builder.ideal("E7/J30")
        # Q, f1..f25, x27..x20, x18, x16, x13
        assert len(ideal.generators) == 37

    def test_cell_restrictions(self, builder: CatalogBuilder) -> None:
        ideal = builder.ideal("E6/I17")
        assert ideal.ring.nvars == 16
        assert len(ideal.generators) == 10

    def test_cell_specialize_drops_the_far_variables(self, builder: CatalogBuilder) -> None:
        ring = builder.ring("E6")
        cell = builder.ring("E6D5")
        p = Polynomial.parse("x*y12 + z1*zb1 + y13*y24", ring)
        assert cell_specialize(p, cell) == Polynomial.parse("y12 + y13*y24", cell)

    def test_matrix_builds(self, builder: CatalogBuilder) -> None:
        ideal = builder.ideal("E6/I14")
        # five Pfaffians and five variables
        assert len(ideal.generators) == 10

    def test_emended_and_printed_variants_differ(self, builder: CatalogBuilder) -> None:
        emended = builder.ideal("E6/I22")
        printed = builder.ideal("E6/I22", Variant.PRINTED)
        assert emended.generators[1:] == printed.generators[1:]
        assert emended.generators[0] != printed.generators[0]

    def test_core_ideal(self, builder: CatalogBuilder) -> None:
        core = builder.core_ideal("E6/I23")
        assert core is not None
        assert len(core.generators) == 5
        assert builder.core_ideal("E6/I26") is None

    def test_unknown_key(self, builder: CatalogBuilder) -> None:
        with pytest.raises(NotFoundError, match="Unknown catalog key"):
            builder.ideal("E6/I99")

    def test_transposed_matrix(self, builder: CatalogBuilder) -> None:
        entry = builder.catalog.entry("E6/I20")
        assert builder.matrix(entry, "X20").shape == (2, 3)
        assert builder.matrix(entry, "X20^T").shape == (3, 2)

    def test_unknown_matrix(self, builder: CatalogBuilder) -> None:
        entry = builder.catalog.entry("E6/I20")
        with pytest.raises(NotFoundError, match="no matrix"):
            builder.matrix(entry, "Z9")

    def test_unknown_build_operation(self, builder: CatalogBuilder) -> None:
        entry = builder.catalog.entry("E6/I20")
        with pytest.raises(ParseError, match="Unknown build operation"):
            builder.build(entry, "frobenius(X20)")

    def test_entry_without_recipe(self, builder: CatalogBuilder) -> None:
        with pytest.raises(NotFoundError, match="no structural recipe"):
            builder.recipe_betti("E7/J50")

    def test_ideals_are_cached(self, builder: CatalogBuilder) -> None:
        assert builder.ideal("E6/I23") is builder.ideal("E6/I23")

    def test_j30_emended_list_adds_x19(self, builder: CatalogBuilder) -> None:
        printed = builder.ideal("E7/J30", Variant.PRINTED)
        emended = builder.ideal("E7/J30")
        x19 = Polynomial.parse("x19", emended.ring)
        assert x19 in emended.generators
        assert x19 not in printed.generators
        assert len(emended.generators) == len(printed.generators) + 1


class TestChains:
    """Nested generator lists along the E7 chain."""

    def test_nested_pairs_follow_consecutive_nodes(self, builder: CatalogBuilder) -> None:
        pairs = builder.nested_pairs("E7")
        assert ("E7/J55", "E7/J54") in pairs
        for upper, lower in pairs:
            upper_node = builder.catalog.entry(upper).node
            lower_node = builder.catalog.entry(lower).node
            assert upper_node is not None and lower_node is not None
            assert upper_node - lower_node == 1


class TestRationalField:
    """The same catalog over the rationals."""

    @pytest.mark.parametrize("key", ["E6/I23", "E6/I20", "E6/I14", "E7/J55", "E7/J30"])
    def test_rational_generators_reduce_to_the_modular_ones(
        self, builder: CatalogBuilder, rational_builder: CatalogBuilder, key: str
    ) -> None:
        modular = builder.ideal(key)
        rational = rational_builder.ideal(key)
        assert rational.ring.coefficient_field.characteristic == 0
        reduced = over_field(rational, modular.ring.coefficient_field)
        assert reduced.generators == modular.generators


@pytest.mark.slow
class TestHunekeUlrich:
    """The deviation two ideal from its matrix construction."""

    def test_construction_matches_the_list(self, builder: CatalogBuilder) -> None:
        built = builder.huneke_ulrich_build()
        assert len(built.generators) == 7
        assert ideals_equal(built, builder.ideal("E7/J51"))
