"""Random instance generation, fuzz campaigns, and small-graph enumeration.

Campaigns are deterministic functions of their configuration: every trial's
randomness comes from ``Random(f"{seed}:{trial}")``, and reports serialize
identically across runs once timing fields are excluded.  Any assertion
failure embeds the offending instance as graph6 plus its root tuple, which
is enough to replay it through the CLI.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Iterator, Literal

from .certificates import (
    search_collection,
    theorem_check,
    verify_critical_collection,
)
from .connectivity import has_connectivity_at_least
from .errors import InvalidInputError
from .feasibility import (
    EXHAUSTIVE,
    SearchBudget,
    is_critically_feasible,
    is_feasible,
    removable_path,
)
from .graphio import serialize_graph6
from .graphs import Graph, RootedGraph, components, induced_subgraph
from .planarity import find_seymour_certificate


class GenerationError(Exception):
    """A trial's instance could not be generated (reported, not fatal)."""


@dataclass(frozen=True)
class CampaignConfig:
    """Deterministic description of a fuzz campaign."""

    seed: int
    trials: int
    n_min: int
    n_max: int
    m: int
    model: Literal["gnp", "kconn"] = "gnp"
    p: float = 0.5
    k: int | None = None
    budget: SearchBudget = EXHAUSTIVE

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise InvalidInputError("trials must be positive")
        if self.m < 0:
            raise InvalidInputError("m must be non-negative")
        if self.n_min < self.m + 2 or self.n_min > self.n_max:
            raise InvalidInputError("need m + 2 <= n_min <= n_max")
        if not 0.0 <= self.p <= 1.0:
            raise InvalidInputError("p must lie in [0, 1]")
        if self.model not in ("gnp", "kconn"):
            raise InvalidInputError(f"unknown model {self.model!r}")

    @property
    def filter_k(self) -> int:
        return self.k if self.k is not None else 2 * self.m + 2

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "m": self.m,
            "model": self.model,
            "p": self.p,
            "k": self.filter_k if self.model == "kconn" else None,
        }


@dataclass(frozen=True)
class CampaignReport:
    """Per-trial verdicts plus summary counts.

    ``counts`` has keys ``feasible``, ``certified`` and ``failures``; for the
    random campaigns it sums to ``config.trials``, for the exhaustive sweep
    to ``extras["instances"]`` (whose trial records keep failures only).
    Timing is kept out of the canonical dict so reports stay byte-identical
    across runs.
    """

    kind: str
    config: CampaignConfig
    trials: tuple[dict, ...]
    counts: dict[str, int]
    wall_time_ms: float
    extras: dict[str, int] = field(default_factory=dict)

    @property
    def failures(self) -> list[dict]:
        return [t for t in self.trials if t["outcome"] not in ("feasible", "certified", "ok")]

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "kind": self.kind,
            "config": self.config.to_dict(),
            "counts": dict(self.counts),
            "trials": [dict(t) for t in self.trials],
        }
        if self.extras:
            out["extras"] = dict(self.extras)
        if include_timing:
            out["wall_time_ms"] = self.wall_time_ms
        return out


def _instance_blob(rg: RootedGraph) -> dict:
    return {
        "graph6": serialize_graph6(rg.graph),
        "roots": {"a": list(rg.a_set), "b1": rg.b1, "b2": rg.b2},
    }


def gen_random_rooted(config: CampaignConfig, trial: int) -> RootedGraph:
    """Deterministic instance for ``(config.seed, trial)``.

    ``gnp`` draws each edge independently; ``kconn`` starts from the same
    draw and adds uniformly random missing edges until the connectivity
    filter passes (this terminates: a complete graph on ``n > k`` vertices
    is ``k``-connected).  Raises :class:`GenerationError` when no graph on
    the drawn vertex count can pass the filter.
    """
    rng = random.Random(f"{config.seed}:{trial}")
    n = rng.randint(config.n_min, config.n_max)
    pairs = list(itertools.combinations(range(n), 2))
    edges = [e for e in pairs if rng.random() < config.p]
    g = Graph.from_edges(n, edges)
    if config.model == "kconn":
        k = config.filter_k
        if n <= k:
            raise GenerationError(f"no graph on {n} vertices is {k}-connected")
        while not has_connectivity_at_least(g, k):
            missing = sorted(set(pairs) - g.edges)
            g = g.add_edges([rng.choice(missing)])
    picks = rng.sample(range(n), config.m + 2)
    return RootedGraph(g, tuple(picks[: config.m]), picks[config.m], picks[config.m + 1])


def campaign_connected_feasible(config: CampaignConfig) -> CampaignReport:
    """Assert that every generated highly connected instance is feasible.

    Intended for ``kconn`` with ``k = 2m + 2``; any infeasible trial is a
    genuine claim violation and lands in ``failures``.
    """
    start = time.perf_counter()
    trials = []
    counts = {"feasible": 0, "certified": 0, "failures": 0}
    for t in range(config.trials):
        try:
            rg = gen_random_rooted(config, t)
        except GenerationError as exc:
            counts["failures"] += 1
            trials.append({"trial": t, "outcome": "generation-failure", "detail": str(exc)})
            continue
        if is_feasible(rg):
            counts["feasible"] += 1
            trials.append({"trial": t, "outcome": "feasible", "n": rg.graph.vertex_count})
        else:
            counts["failures"] += 1
            trials.append({"trial": t, "outcome": "violation-infeasible", **_instance_blob(rg)})
    return CampaignReport(
        "connected-feasible", config, tuple(trials), counts,
        (time.perf_counter() - start) * 1000.0,
    )


def _verify_removable(rg: RootedGraph, path_vertices: tuple[int, ...]) -> str | None:
    """Independent postcondition check; returns a complaint or ``None``."""
    g = rg.graph
    pv = set(path_vertices)
    if set(rg.a_set) & pv:
        return "path meets the a-set"
    if path_vertices[0] != rg.b1 or path_vertices[-1] != rg.b2:
        return "path does not join b1 to b2"
    for u, v in zip(path_vertices, path_vertices[1:]):
        if not g.has_edge(u, v):
            return "path has a non-edge"
    remainder, relabel = induced_subgraph(g, set(range(g.vertex_count)) - pv)
    comps = components(remainder)
    if len(comps) > 1:
        return "remainder is disconnected"
    if rg.a_set and not {relabel[a] for a in rg.a_set} <= (comps[0] if comps else set()):
        return "remainder misses a root"
    return None


def campaign_removable_path(config: CampaignConfig) -> CampaignReport:
    """Assert the removable-path procedure succeeds on highly connected
    instances, re-verifying its postconditions independently and checking
    the strict lexicographic growth of the component vectors."""
    start = time.perf_counter()
    trials = []
    counts = {"feasible": 0, "certified": 0, "failures": 0}
    total_iterations = 0
    max_iterations = 0
    for t in range(config.trials):
        try:
            rg = gen_random_rooted(config, t)
        except GenerationError as exc:
            counts["failures"] += 1
            trials.append({"trial": t, "outcome": "generation-failure", "detail": str(exc)})
            continue
        report = removable_path(rg, config.budget)
        complaint = None
        if not report.ok:
            complaint = f"procedure failed: {report.failure}"
        else:
            complaint = _verify_removable(rg, report.path.vertices)
            if complaint is None:
                history = report.component_history
                if any(not b > a for a, b in zip(history, history[1:])):
                    complaint = "component vector did not strictly increase"
        if complaint is None:
            counts["feasible"] += 1
            total_iterations += report.iterations
            max_iterations = max(max_iterations, report.iterations)
            trials.append({"trial": t, "outcome": "ok", "iterations": report.iterations})
        else:
            counts["failures"] += 1
            trials.append({"trial": t, "outcome": "violation", "detail": complaint, **_instance_blob(rg)})
    return CampaignReport(
        "removable-path", config, tuple(trials), counts,
        (time.perf_counter() - start) * 1000.0,
        {"total_iterations": total_iterations, "max_iterations": max_iterations},
    )


def small_graphs(max_n: int, min_n: int = 0) -> Iterator[Graph]:
    """All non-isomorphic graphs with ``min_n <= n <= max_n`` vertices.

    Backed by the published atlas of small graphs; supports ``max_n <= 7``.
    """
    if max_n > 7:
        raise InvalidInputError("small-graph enumeration is available up to 7 vertices")
    from networkx.generators.atlas import graph_atlas_g

    for nxg in graph_atlas_g():
        n = nxg.number_of_nodes()
        if min_n <= n <= max_n:
            order = {v: i for i, v in enumerate(sorted(nxg.nodes()))}
            yield Graph.from_edges(n, ((order[u], order[v]) for u, v in nxg.edges()))


def rooted_instances(g: Graph, m: int) -> Iterator[RootedGraph]:
    """All root placements on ``g`` up to the provable symmetries.

    The a-set is unordered and ``b1 < b2``; feasibility and the certificate
    predicates are invariant under those orderings.
    """
    n = g.vertex_count
    for a_combo in itertools.combinations(range(n), m):
        rest = [v for v in range(n) if v not in a_combo]
        for b1, b2 in itertools.combinations(rest, 2):
            yield RootedGraph(g, a_combo, b1, b2)


def campaign_exhaustive_small(config: CampaignConfig) -> CampaignReport:
    """Sweep every instance up to ``config.n_max`` vertices for ``config.m``.

    Every (graph, placement) instance gets a full verdict check; any
    counterexample-candidate is a failure.  For ``m = 2`` each instance is
    additionally cross-checked against the planar certificate (it must exist
    exactly for the infeasible instances).  For ``m <= 1``, every pinned set
    along a found linkage path is tested: when the instance is critically
    feasible for it, the critical-certificate search must succeed.
    """
    start = time.perf_counter()
    trials = []
    counts = {"feasible": 0, "certified": 0, "failures": 0}
    done = 0
    for g in small_graphs(config.n_max, config.n_min):
        if g.vertex_count < config.m + 2:
            continue
        g6 = serialize_graph6(g)
        for rg in rooted_instances(g, config.m):
            done += 1
            verdict = theorem_check(rg, config.budget)
            if verdict.outcome in ("feasible", "certified"):
                complaint = _cross_checks(rg, verdict)
            else:
                complaint = f"verdict {verdict.outcome}"
            if complaint is None:
                counts[verdict.outcome] += 1
            else:
                counts["failures"] += 1
                trials.append(
                    {"trial": done - 1, "outcome": "violation", "detail": complaint,
                     "graph6": g6, "roots": {"a": list(rg.a_set), "b1": rg.b1, "b2": rg.b2}}
                )
    return CampaignReport(
        "exhaustive-small", config, tuple(trials), counts,
        (time.perf_counter() - start) * 1000.0,
        {"instances": done},
    )


def _cross_checks(rg: RootedGraph, verdict) -> str | None:
    """Per-instance consistency checks layered on top of the basic verdict."""
    if rg.m == 2:
        cert = find_seymour_certificate(rg)
        feasible = verdict.outcome == "feasible"
        if feasible and cert is not None:
            return "planar certificate found for a feasible instance"
        if not feasible and cert is None:
            return "no planar certificate for an infeasible instance"
    if rg.m <= 1 and verdict.outcome == "feasible":
        interior = [v for v in verdict.pair.b_path.vertices if v not in (rg.b1, rg.b2)]
        for size in range(len(interior) + 1):
            for u_combo in itertools.combinations(interior, size):
                u_set = frozenset(u_combo)
                if not is_critically_feasible(rg, u_set):
                    continue
                coll = search_collection(rg, "critical", u_set)
                if coll is None:
                    return f"no critical certificate for pinned set {sorted(u_set)}"
                if not verify_critical_collection(rg, u_set, coll).holds:
                    return f"critical certificate fails verification for {sorted(u_set)}"
    return None
