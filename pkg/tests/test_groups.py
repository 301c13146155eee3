import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sumsphere.groups import (
    GroupElement,
    GroupSpec,
    add,
    all_abelian_groups,
    encode_residues,
    enumerate_elements,
    exponent,
    format_element,
    label,
    negate,
    parse_element,
    parse_group,
    parse_subset_literal,
    residue_matrix,
    scalar_mul,
    self_inverse_count,
    units,
)

groups_strategy = st.lists(st.integers(1, 12), min_size=1, max_size=3).map(
    lambda orders: GroupSpec(tuple(orders))
)


def elements_of(G):
    return st.integers(0, G.order - 1).map(G.element_at)


@st.composite
def group_and_elements(draw, count=1):
    G = draw(groups_strategy)
    elems = [draw(elements_of(G)) for _ in range(count)]
    return (G, *elems)


class TestGroupSpec:
    def test_order_is_product(self):
        assert GroupSpec((2, 3, 4)).order == 24

    def test_rejects_nonpositive_orders(self):
        with pytest.raises(ValueError):
            GroupSpec((0,))
        with pytest.raises(ValueError):
            GroupSpec((3, -1))

    def test_identity(self):
        G = GroupSpec((4, 6))
        assert G.identity.residues == (0, 0)
        assert G.identity.index == 0

    def test_element_reduces_residues(self):
        G = GroupSpec((5,))
        assert G.element(7).residues == (5 + 7 - 10,)
        assert G.element(-1).residues == (4,)

    def test_index_roundtrip_mixed_radix(self):
        # first factor most significant
        G = GroupSpec((2, 4))
        assert [G.element_at(i).residues for i in range(4)] == [
            (0, 0), (0, 1), (0, 2), (0, 3)]
        assert G.element_at(4).residues == (1, 0)
        for i in range(G.order):
            assert G.index_of(G.element_at(i)) == i

    def test_enumeration_order_z2xz2(self):
        G = GroupSpec((2, 2))
        assert [g.residues for g in enumerate_elements(G)] == [
            (0, 0), (0, 1), (1, 0), (1, 1)]


class TestArithmetic:
    @given(group_and_elements(count=2))
    def test_commutative(self, data):
        _, g, h = data
        assert add(g, h) == add(h, g)

    @given(group_and_elements(count=3))
    def test_associative(self, data):
        _, g, h, k = data
        assert add(add(g, h), k) == add(g, add(h, k))

    @given(group_and_elements())
    def test_identity_and_inverse(self, data):
        G, g = data
        assert add(g, G.identity) == g
        assert add(g, negate(g)) == G.identity

    @given(group_and_elements(), st.integers(-10, 10), st.integers(-10, 10))
    def test_scalar_mul_distributes_over_scalars(self, data, lam, mu):
        _, g = data
        assert scalar_mul(lam + mu, g) == add(scalar_mul(lam, g), scalar_mul(mu, g))

    @given(group_and_elements(count=2), st.integers(-10, 10))
    def test_scalar_mul_distributes_over_elements(self, data, lam):
        _, g, h = data
        assert scalar_mul(lam, add(g, h)) == add(scalar_mul(lam, g), scalar_mul(lam, h))

    @given(group_and_elements())
    def test_dunders_match_functions(self, data):
        _, g = data
        assert -g == negate(g)
        assert g + g == scalar_mul(2, g)
        assert 3 * g == add(g, scalar_mul(2, g))

    def test_cross_group_addition_rejected(self):
        a = GroupSpec((4,)).element(1)
        b = GroupSpec((5,)).element(1)
        with pytest.raises(ValueError):
            add(a, b)


class TestStructure:
    @pytest.mark.parametrize("orders,count", [
        ((10,), 2), ((3,), 1), ((2, 4), 4), ((2, 2, 2), 8), ((1,), 1), ((5, 7), 1),
    ])
    def test_self_inverse_count(self, orders, count):
        assert self_inverse_count(GroupSpec(orders)) == count

    @given(groups_strategy)
    def test_self_inverse_count_by_enumeration(self, G):
        doubled_zero = sum(1 for g in enumerate_elements(G) if add(g, g) == G.identity)
        assert self_inverse_count(G) == doubled_zero

    def test_units_z12(self):
        assert units(GroupSpec((12,))) == [1, 5, 7, 11]

    def test_units_trivial_group(self):
        assert units(GroupSpec((1,))) == [1]

    def test_units_rejects_products(self):
        with pytest.raises(ValueError):
            units(GroupSpec((2, 4)))

    @pytest.mark.parametrize("orders,e", [
        ((6,), 6), ((2, 4), 4), ((2, 2), 2), ((4, 6), 12), ((1,), 1),
    ])
    def test_exponent(self, orders, e):
        assert exponent(GroupSpec(orders)) == e

    @given(group_and_elements())
    def test_exponent_annihilates(self, data):
        G, g = data
        assert scalar_mul(exponent(G), g) == G.identity


class TestLiterals:
    @pytest.mark.parametrize("text,orders", [
        ("Z25", (25,)), ("Z2xZ4", (2, 4)), ("z3XZ5", (3, 5)), (" Z7 ", (7,)),
    ])
    def test_parse_group(self, text, orders):
        assert parse_group(text).orders == orders

    @pytest.mark.parametrize("text", ["Q8", "Z", "Zx", "Z2x", "25", "Z2+Z4", ""])
    def test_parse_group_rejects(self, text):
        with pytest.raises(ValueError):
            parse_group(text)

    @given(groups_strategy)
    def test_label_roundtrip(self, G):
        assert parse_group(label(G)).orders == G.orders

    @given(group_and_elements())
    def test_element_literal_roundtrip(self, data):
        G, g = data
        assert parse_element(G, format_element(g)) == g

    def test_parse_element_wrong_arity(self):
        with pytest.raises(ValueError, match="residues"):
            parse_element(GroupSpec((2, 4)), "1")

    def test_parse_element_names_bad_token(self):
        with pytest.raises(ValueError, match="'x'"):
            parse_element(GroupSpec((25,)), "x")

    def test_subset_literal_plain_commas_cyclic(self):
        G = GroupSpec((25,))
        got = parse_subset_literal(G, "1,4,6,9,11")
        assert [g.residues[0] for g in got] == [1, 4, 6, 9, 11]

    def test_subset_literal_semicolons_product(self):
        G = GroupSpec((2, 4))
        got = parse_subset_literal(G, "0,1;1,3")
        assert [g.residues for g in got] == [(0, 1), (1, 3)]

    def test_subset_literal_single_product_element(self):
        G = GroupSpec((2, 4))
        got = parse_subset_literal(G, "1,2")
        assert [g.residues for g in got] == [(1, 2)]

    def test_subset_literal_empty_rejected(self):
        with pytest.raises(ValueError):
            parse_subset_literal(GroupSpec((5,)), "  ")


class TestVectorized:
    @given(groups_strategy)
    def test_residue_matrix_roundtrip(self, G):
        mat = residue_matrix(G)
        assert mat.shape == (G.order, len(G.orders))
        back = encode_residues(G, mat)
        assert np.array_equal(back, np.arange(G.order))

    @given(group_and_elements())
    def test_residue_matrix_rows(self, data):
        G, g = data
        assert tuple(residue_matrix(G)[g.index]) == g.residues


class TestIsoClasses:
    @pytest.mark.parametrize("order,expected", [
        (1, [(1,)]),
        (7, [(7,)]),
        (8, [(8,), (4, 2), (2, 2, 2)]),
        (12, [(4, 3), (2, 2, 3)]),
        (25, [(25,), (5, 5)]),
    ])
    def test_all_abelian_groups(self, order, expected):
        assert [G.orders for G in all_abelian_groups(order)] == expected

    @given(st.integers(1, 60))
    def test_orders_multiply_back(self, order):
        for G in all_abelian_groups(order):
            assert G.order == order
