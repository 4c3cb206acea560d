"""Instance generation determinism, campaign reports, small-graph enumeration."""

import json

import pytest

from linklab.connectivity import vertex_connectivity
from linklab.feasibility import SearchBudget
from linklab.graphs import Graph
from linklab.harness import (
    CampaignConfig,
    GenerationError,
    campaign_connected_feasible,
    campaign_exhaustive_small,
    campaign_removable_path,
    gen_random_rooted,
    rooted_instances,
    small_graphs,
)


def config(**overrides) -> CampaignConfig:
    base = dict(seed=7, trials=5, n_min=6, n_max=8, m=1, model="kconn")
    base.update(overrides)
    return CampaignConfig(**base)


class TestGeneration:
    def test_deterministic(self):
        c = config()
        a = gen_random_rooted(c, 0)
        b = gen_random_rooted(c, 0)
        assert a == b
        assert gen_random_rooted(c, 1) != a

    def test_filter_soundness(self):
        c = config(trials=8)
        for t in range(8):
            rg = gen_random_rooted(c, t)
            assert vertex_connectivity(rg.graph) >= 4

    def test_gnp_extremes(self):
        full = config(model="gnp", p=1.0, n_min=5, n_max=5)
        assert gen_random_rooted(full, 0).graph == Graph.complete(5)
        empty = config(model="gnp", p=0.0, n_min=5, n_max=5)
        assert gen_random_rooted(empty, 0).graph.edge_count == 0

    def test_impossible_filter(self):
        c = config(n_min=4, n_max=4, k=4)
        with pytest.raises(GenerationError):
            gen_random_rooted(c, 0)

    def test_roots_are_distinct_vertices(self):
        c = config(m=2, n_min=8, n_max=8)
        rg = gen_random_rooted(c, 3)
        roots = (*rg.a_set, rg.b1, rg.b2)
        assert len(set(roots)) == 4
        assert all(0 <= v < rg.graph.vertex_count for v in roots)


class TestCampaigns:
    def test_connected_feasible_all_pass(self):
        report = campaign_connected_feasible(config(trials=10))
        assert report.counts == {"feasible": 10, "certified": 0, "failures": 0}
        assert len(report.trials) == 10
        assert sum(report.counts.values()) == 10

    def test_removable_all_pass(self):
        report = campaign_removable_path(config(trials=10))
        assert report.counts["failures"] == 0
        assert report.counts["feasible"] == 10
        assert "max_iterations" in report.extras

    def test_removable_m3_sample(self):
        report = campaign_removable_path(
            CampaignConfig(seed=11, trials=50, n_min=10, n_max=12, m=3, model="kconn")
        )
        assert report.counts == {"feasible": 50, "certified": 0, "failures": 0}

    def test_connected_feasible_m0(self):
        report = campaign_connected_feasible(
            CampaignConfig(seed=2, trials=40, n_min=5, n_max=8, m=0, model="kconn", k=1)
        )
        assert report.counts["feasible"] == 40

    def test_exhaustive_m0_critical_certificates(self):
        # Every critically feasible pinned set found along witness paths on
        # graphs with up to 5 vertices admits a verified critical certificate.
        report = campaign_exhaustive_small(
            CampaignConfig(seed=0, trials=1, n_min=2, n_max=5, m=0, model="gnp")
        )
        assert report.counts["failures"] == 0
        assert report.extras["instances"] == sum(
            1 for g in small_graphs(5) if g.vertex_count >= 2
            for _ in rooted_instances(g, 0)
        )

    def test_generation_failures_are_reported_not_fatal(self):
        report = campaign_connected_feasible(config(trials=3, n_min=4, n_max=4, k=4))
        assert report.counts["failures"] == 3
        assert all(t["outcome"] == "generation-failure" for t in report.trials)

    def test_exhaustive_small_m1(self):
        report = campaign_exhaustive_small(config(trials=1, model="gnp", n_min=3, n_max=4, m=1))
        assert report.counts["failures"] == 0
        assert report.counts["feasible"] + report.counts["certified"] == report.extras["instances"]
        # 3 placements on each 3-vertex graph, 12 on each 4-vertex graph.
        assert report.extras["instances"] == 3 * 4 + 12 * 11

    def test_report_determinism(self):
        c = config(trials=6)
        a = campaign_removable_path(c).to_dict()
        b = campaign_removable_path(c).to_dict()
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
        assert "wall_time_ms" not in a
        timed = campaign_removable_path(c).to_dict(include_timing=True)
        assert "wall_time_ms" in timed

    def test_failure_embeds_replay_data(self):
        # Force a violation record by running the feasibility campaign on
        # sparse low-connectivity instances with m = 2 and no filter.
        c = CampaignConfig(seed=3, trials=40, n_min=4, n_max=5, m=2, model="gnp", p=0.15)
        report = campaign_connected_feasible(c)
        violations = [t for t in report.trials if t["outcome"] == "violation-infeasible"]
        assert violations, "expected sparse m=2 instances to include infeasible draws"
        for v in violations:
            assert "graph6" in v and "roots" in v


class TestSmallGraphs:
    def test_counts_by_order(self):
        from collections import Counter

        counts = Counter(g.vertex_count for g in small_graphs(6))
        assert counts == {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}

    def test_cap_enforced(self):
        with pytest.raises(Exception):
            list(small_graphs(8))

    def test_rooted_instances_count(self):
        g = Graph.complete(5)
        assert len(list(rooted_instances(g, 1))) == 5 * 6
        assert len(list(rooted_instances(g, 2))) == 10 * 3
        assert len(list(rooted_instances(g, 0))) == 10


class TestConfigValidation:
    def test_bounds(self):
        with pytest.raises(Exception):
            CampaignConfig(seed=0, trials=0, n_min=4, n_max=5, m=1)
        with pytest.raises(Exception):
            CampaignConfig(seed=0, trials=1, n_min=2, n_max=5, m=1)
        with pytest.raises(Exception):
            CampaignConfig(seed=0, trials=1, n_min=4, n_max=5, m=1, p=1.5)
        with pytest.raises(Exception):
            CampaignConfig(seed=0, trials=1, n_min=4, n_max=3, m=1)

    def test_budget_passthrough(self):
        c = config(budget=SearchBudget(10**6, 10**6))
        assert c.budget.max_nodes_expanded == 10**6
