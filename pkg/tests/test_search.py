import pytest

from oracles import naive_phi, naive_tau
from sumsphere.formulas import delannoy, phi_closed, tau_closed
from sumsphere.groups import GroupSpec, units
from sumsphere.search import (
    SearchConfig,
    SearchResult,
    conjecture_probe_perfect,
    find_perfect_sets,
    is_perfect_set,
    phi,
    tau,
    unit_orbit_representative,
)
from sumsphere.sumsets import Subset, is_s_spanning, is_t_independent


def residues(A):
    return sorted(g.residues[0] for g in A.elements)


class TestConfig:
    def test_rejects_bad_knobs(self):
        with pytest.raises(ValueError):
            SearchConfig(thread_count=0)
        with pytest.raises(ValueError):
            SearchConfig(node_budget=-1)
        with pytest.raises(ValueError):
            SearchConfig(time_budget=-0.5)

    def test_defaults_are_exhaustive(self):
        cfg = SearchConfig()
        assert cfg.symmetry_reduction and cfg.thread_count == 1
        assert cfg.node_budget is None and cfg.time_budget is None


class TestTau:
    @pytest.mark.parametrize(
        "n, t, expected",
        [(13, 4, 2), (25, 3, 5), (70, 6, 3), (10, 2, 4), (12, 1, 11), (2, 2, 0), (9, 3, 1)],
    )
    def test_pins(self, n, t, expected):
        result = tau(GroupSpec((n,)), t)
        assert result.value == expected
        assert result.exhaustive
        assert result.witness.m == expected
        if expected:
            assert is_t_independent(result.witness, t)

    def test_empty_witness_when_nothing_is_independent(self):
        result = tau(GroupSpec((2,)), 2)
        assert result.value == 0
        assert result.witness.m == 0

    def test_rejects_trivial_group_and_bad_t(self):
        with pytest.raises(ValueError):
            tau(GroupSpec((1,)), 2)
        with pytest.raises(ValueError):
            tau(GroupSpec((5,)), 0)

    @pytest.mark.parametrize("orders", [(8,), (11,), (2, 4), (3, 3), (2, 2, 3)])
    @pytest.mark.parametrize("t", [1, 2])
    def test_matches_closed_form(self, orders, t):
        G = GroupSpec(orders)
        assert tau(G, t).value == tau_closed(G, t)

    @pytest.mark.parametrize("orders", [(5,), (9,), (12,), (16,), (2, 4), (2, 2, 3), (3, 3)])
    @pytest.mark.parametrize("t", [2, 3, 4, 5, 6])
    def test_matches_naive_search(self, orders, t):
        G = GroupSpec(orders)
        result = tau(G, t)
        assert result.value == naive_tau(G, t)
        assert is_t_independent(result.witness, t) or result.value == 0

    def test_symmetry_reduction_changes_nothing(self):
        for n in (14, 21, 25, 33):
            G = GroupSpec((n,))
            with_sym = tau(G, 3)
            without = tau(G, 3, SearchConfig(symmetry_reduction=False))
            assert with_sym.value == without.value
            assert with_sym.exhaustive and without.exhaustive

    def test_thread_count_changes_nothing(self):
        G = GroupSpec((60,))
        single = tau(G, 3)
        multi = tau(G, 3, SearchConfig(thread_count=4))
        assert (single.value, single.exhaustive) == (multi.value, multi.exhaustive)
        assert is_t_independent(multi.witness, 3)

    def test_unit_multiples_of_witness_stay_independent(self):
        G = GroupSpec((25,))
        w = tau(G, 3).witness
        for u in units(G):
            image = Subset.of(G, *sorted((u * a.residues[0]) % 25 for a in w.elements))
            assert is_t_independent(image, 3)

    def test_node_budget_gives_honest_lower_bound(self):
        G = GroupSpec((60,))
        exact = tau(G, 3).value
        capped = tau(G, 3, SearchConfig(node_budget=3))
        assert not capped.exhaustive
        assert 0 <= capped.value <= exact
        if capped.value:
            assert is_t_independent(capped.witness, 3)
            assert capped.witness.m == capped.value

    def test_time_budget_zero_aborts(self):
        result = tau(GroupSpec((60,)), 3, SearchConfig(time_budget=0.0))
        assert not result.exhaustive

    def test_nodes_and_elapsed_are_reported(self):
        result = tau(GroupSpec((30,)), 3)
        assert isinstance(result, SearchResult)
        assert result.nodes_explored > 0
        assert result.elapsed >= 0.0


class TestPhi:
    @pytest.mark.parametrize(
        "n, s, expected",
        [(34, 2, 5), (13, 2, 2), (5, 1, 2), (50, 2, 6), (7, 1, 3), (1, 3, 0), (2, 1, 1)],
    )
    def test_pins(self, n, s, expected):
        result = phi(GroupSpec((n,)), s)
        assert result.value == expected
        assert result.exhaustive
        assert result.witness.m == expected
        assert is_s_spanning(result.witness, s)

    def test_rejects_bad_s(self):
        with pytest.raises(ValueError):
            phi(GroupSpec((5,)), 0)

    @pytest.mark.parametrize("orders", [(2,), (6,), (9,), (12,), (16,), (2, 4), (3, 3), (2, 2, 3)])
    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_matches_naive_search(self, orders, s):
        G = GroupSpec(orders)
        result = phi(G, s)
        assert result.value == naive_phi(G, s)
        assert is_s_spanning(result.witness, s)

    @pytest.mark.parametrize("orders", [(7,), (10,), (2, 4), (5, 5)])
    def test_s1_matches_closed_form(self, orders):
        G = GroupSpec(orders)
        assert phi(G, 1).value == phi_closed(G)

    def test_witness_is_minimal(self):
        result = phi(GroupSpec((24,)), 2)
        assert is_s_spanning(result.witness, 2)
        assert not any(
            is_s_spanning(Subset(result.witness.group, tuple(e for e in result.witness.elements if e != drop)), 2)
            for drop in result.witness.elements
        ) or result.value == 1

    def test_node_budget_gives_level_lower_bound(self):
        G = GroupSpec((50,))
        exact = phi(G, 2).value
        capped = phi(G, 2, SearchConfig(node_budget=3))
        assert not capped.exhaustive
        assert capped.witness is None
        assert capped.value <= exact


class TestPerfectSets:
    def test_pair_three_is_exactly_one_unit_orbit(self):
        found = find_perfect_sets(2, 3)
        assert len(found) == 20
        assert all(G.is_cyclic and G.order == 25 for G, _ in found)
        got = {frozenset(residues(A)) for _, A in found}
        expected = {frozenset({(3 * u) % 25, (4 * u) % 25}) for u in units(GroupSpec((25,)))}
        assert got == expected

    def test_singleton_two_in_z5(self):
        found = find_perfect_sets(1, 2)
        assert {tuple(residues(A)) for _, A in found} == {(1,), (2,), (3,), (4,)}

    def test_triple_one_in_z7(self):
        found = find_perfect_sets(3, 1)
        assert len(found) == 8
        for G, A in found:
            assert G.orders == (7,)
            members = set(residues(A))
            negatives = {(7 - r) % 7 for r in members}
            assert members | negatives == {1, 2, 3, 4, 5, 6}
            assert members.isdisjoint(negatives)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            find_perfect_sets(0, 2)

    def test_is_perfect_set_pins(self):
        G = GroupSpec((25,))
        assert is_perfect_set(Subset.of(G, 3, 4), 3)
        assert not is_perfect_set(Subset.of(G, 1, 2), 3)
        assert not is_perfect_set(Subset.of(GroupSpec((24,)), 3, 4), 3)

    def test_probe_searched_cell_is_empty(self):
        cells = conjecture_probe_perfect(3, 2)
        assert len(cells) == 1
        cell = cells[0]
        assert (cell.m, cell.s, cell.order) == (3, 2, 25)
        assert cell.searched
        assert cell.witnesses == ()

    def test_probe_honors_order_cap(self):
        cells = conjecture_probe_perfect(4, 3, order_cap=100)
        by_key = {(c.m, c.s): c for c in cells}
        assert set(by_key) == {(3, 2), (3, 3), (4, 2), (4, 3)}
        assert by_key[(4, 3)].order == delannoy(4, 3)
        assert not by_key[(4, 3)].searched
        assert all(by_key[k].searched for k in [(3, 2), (3, 3), (4, 2)])
        assert all(c.witnesses == () for c in cells)


class TestUnitOrbits:
    def test_representative_pin(self):
        G = GroupSpec((25,))
        rep = unit_orbit_representative(Subset.of(G, 3, 4))
        assert residues(rep) == [1, 7]

    def test_constant_on_orbit(self):
        G = GroupSpec((25,))
        A = Subset.of(G, 3, 4)
        rep = residues(unit_orbit_representative(A))
        for u in units(G):
            image = Subset.of(G, *sorted((u * r) % 25 for r in residues(A)))
            assert residues(unit_orbit_representative(image)) == rep

    def test_rejects_product_groups(self):
        G = GroupSpec((5, 5))
        with pytest.raises(ValueError):
            unit_orbit_representative(Subset.of(G, (1, 2)))
