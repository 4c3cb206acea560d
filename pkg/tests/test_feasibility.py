"""Linkage-pair search against the naive all-paths oracle, plus properties."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linklab.errors import InvalidInputError, SearchBudgetExceeded
from linklab.feasibility import (
    SearchBudget,
    find_linkage_pair,
    is_critically_feasible,
    is_feasible,
    two_linkage,
)
from linklab.graphs import Graph, RootedGraph
from oracles import (
    brute_two_linkage_exists,
    naive_critical_by_deletion,
    naive_is_critically_feasible,
    naive_is_feasible,
)
from strategies import graphs, rooted_graphs


class TestFindLinkagePair:
    def test_triangle(self):
        rg = RootedGraph(Graph.complete(3), (0,), 1, 2)
        pair = find_linkage_pair(rg)
        assert pair is not None
        assert pair.a_part == {0}
        assert pair.b_path.vertices == (1, 2)
        pair.validate(rg)

    def test_path_through_root_infeasible(self):
        rg = RootedGraph(Graph.path_graph(3), (1,), 0, 2)
        assert find_linkage_pair(rg) is None

    def test_tight_family_m3_infeasible(self):
        from linklab.certificates import gmk_graph

        assert find_linkage_pair(gmk_graph(3, 2)) is None

    def test_a_part_is_full_component(self):
        # b-path along the bottom, a-component is everything else.
        g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (3, 5)])
        rg = RootedGraph(g, (4,), 0, 2)
        pair = find_linkage_pair(rg)
        assert pair.a_part == {3, 4, 5}

    def test_budget_exhaustion_is_distinct(self):
        # b2 = 7 is the last candidate at every level, forcing a deep dive.
        rg = RootedGraph(Graph.complete(8), (0, 1), 2, 7)
        with pytest.raises(SearchBudgetExceeded):
            find_linkage_pair(rg, SearchBudget(max_nodes_expanded=2))

    def test_budget_must_be_positive(self):
        with pytest.raises(InvalidInputError):
            SearchBudget(0, 10)


class TestIsFeasible:
    def test_k5_any_roots(self):
        g = Graph.complete(5)
        for a in range(5):
            for b1, b2 in itertools.combinations([v for v in range(5) if v != a], 2):
                assert is_feasible(RootedGraph(g, (a,), b1, b2))

    def test_tight_family_members(self):
        from linklab.certificates import gmk_graph

        # The m = 1 members are feasible (the spine path leaves the single
        # root in its own component); members with m >= 2 split the roots.
        for k in range(5):
            assert is_feasible(gmk_graph(1, k))
            assert naive_is_feasible(gmk_graph(1, k))
        for m in (2, 3, 4):
            for k in range(5):
                assert not is_feasible(gmk_graph(m, k))

    @given(rooted_graphs(min_m=0, max_m=0, max_n=6, connected=True))
    def test_m_zero_connected_always_feasible(self, rg):
        assert is_feasible(rg)

    @given(rooted_graphs(max_m=2, max_n=7))
    @settings(max_examples=300)
    def test_matches_naive_oracle(self, rg):
        assert is_feasible(rg) == naive_is_feasible(rg)

    @given(rooted_graphs(max_m=2, max_n=7), st.data())
    def test_edge_monotone(self, rg, data):
        pair = find_linkage_pair(rg)
        if pair is None:
            return
        missing = sorted(
            set(itertools.combinations(range(rg.graph.vertex_count), 2)) - rg.graph.edges
        )
        if not missing:
            return
        extra = data.draw(st.sampled_from(missing))
        bigger = RootedGraph(rg.graph.add_edges([extra]), rg.a_set, rg.b1, rg.b2)
        assert is_feasible(bigger)
        pair.validate(bigger)

    @given(rooted_graphs(max_m=3, max_n=6), st.data())
    def test_root_symmetry(self, rg, data):
        value = is_feasible(rg)
        perm = data.draw(st.permutations(rg.a_set))
        assert is_feasible(RootedGraph(rg.graph, tuple(perm), rg.b2, rg.b1)) == value

    @given(rooted_graphs(max_m=2, max_n=7))
    def test_witness_is_sound(self, rg):
        pair = find_linkage_pair(rg)
        if pair is not None:
            pair.validate(rg)


class TestTwoLinkage:
    def test_k4_always(self):
        g = Graph.complete(4)
        assert two_linkage(g, 0, 1, 2, 3) is not None

    def test_interleaved_cycle_has_none(self):
        # On the 4-cycle, terminals in interleaved order cannot be linked.
        g = Graph.cycle(4)
        assert two_linkage(g, 0, 2, 1, 3) is None

    def test_two_disjoint_edges(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        p1, p2 = two_linkage(g, 0, 1, 2, 3)
        assert p1.vertices == (0, 1)
        assert p2.vertices == (2, 3)

    def test_terminals_must_be_distinct(self):
        with pytest.raises(InvalidInputError):
            two_linkage(Graph.complete(4), 0, 0, 1, 2)

    def test_paths_are_disjoint_and_valid(self):
        g = Graph.cycle(6)
        result = two_linkage(g, 0, 2, 3, 5)
        assert result is not None
        p1, p2 = result
        p1.validate_in(g)
        p2.validate_in(g)
        assert not p1.vertex_set & p2.vertex_set

    @given(graphs(max_n=6), st.data())
    @settings(max_examples=200)
    def test_matches_brute_force(self, g, data):
        if g.vertex_count < 4:
            return
        s1, t1, s2, t2 = data.draw(
            st.permutations(range(g.vertex_count)).map(lambda p: p[:4])
        )
        got = two_linkage(g, s1, t1, s2, t2)
        assert (got is not None) == brute_two_linkage_exists(g, s1, t1, s2, t2)

    def test_exhaustive_sweep_small_graphs(self):
        # Existence agrees with brute force on every graph with at most 6
        # vertices, over all terminal placements up to pair symmetry.
        from linklab.harness import small_graphs

        for g in small_graphs(6):
            n = g.vertex_count
            if n < 4:
                continue
            for s1, t1 in itertools.combinations(range(n), 2):
                for s2, t2 in itertools.combinations(
                    [v for v in range(n) if v not in (s1, t1)], 2
                ):
                    if (s1, t1) > (s2, t2):
                        continue
                    got = two_linkage(g, s1, t1, s2, t2)
                    assert (got is not None) == brute_two_linkage_exists(g, s1, t1, s2, t2)
                    if got is not None:
                        p1, p2 = got
                        p1.validate_in(g)
                        p2.validate_in(g)
                        assert not p1.vertex_set & p2.vertex_set

    @given(graphs(max_n=6), st.data())
    def test_agrees_with_two_rooted_feasibility(self, g, data):
        # A connected part holding {a1, a2} plus a disjoint b1-b2 path is the
        # same thing as disjoint a1-a2 and b1-b2 paths.
        if g.vertex_count < 4:
            return
        a1, a2, b1, b2 = data.draw(
            st.permutations(range(g.vertex_count)).map(lambda p: p[:4])
        )
        rg = RootedGraph(g, (a1, a2), b1, b2)
        assert is_feasible(rg) == (two_linkage(g, a1, a2, b1, b2) is not None)


class TestCriticalFeasibility:
    def test_forced_interior_vertex(self):
        rg = RootedGraph(Graph.path_graph(3), (), 0, 2)
        assert is_critically_feasible(rg, {1})

    def test_cycle_detour_defeats(self):
        rg = RootedGraph(Graph.cycle(4), (), 0, 2)
        assert not is_critically_feasible(rg, {1})

    def test_empty_u_is_feasibility(self):
        feasible = RootedGraph(Graph.complete(3), (0,), 1, 2)
        infeasible = RootedGraph(Graph.path_graph(3), (1,), 0, 2)
        assert is_critically_feasible(feasible, frozenset())
        assert not is_critically_feasible(infeasible, frozenset())

    def test_u_must_avoid_roots(self):
        rg = RootedGraph(Graph.complete(4), (0,), 1, 2)
        with pytest.raises(InvalidInputError):
            is_critically_feasible(rg, {0})

    @given(rooted_graphs(max_m=1, max_n=7), st.data())
    @settings(max_examples=250)
    def test_matches_deletion_oracle(self, rg, data):
        free = sorted(set(range(rg.graph.vertex_count)) - rg.roots)
        u_set = frozenset(data.draw(st.sets(st.sampled_from(free), max_size=2))) if free else frozenset()
        got = is_critically_feasible(rg, u_set)
        assert got == naive_critical_by_deletion(rg, u_set)
        # For m <= 1 the deletion form and the literal every-witness-path
        # reading coincide.
        assert got == naive_is_critically_feasible(rg, u_set)
