"""Deciding feasibility of rooted graphs and finding removable paths.

A rooted graph ``(G, {a_1..a_m}, b1, b2)`` is *feasible* when ``G`` has a
``b1``-``b2`` path ``P`` with all ``a_i`` inside a single component of
``G - P``.  ``find_linkage_pair`` decides this by exhaustive DFS over
``b1``-``b2`` paths with two conservative prunes, so a ``None`` answer is a
proof of infeasibility.  ``removable_path`` upgrades a linkage path to one
whose removal leaves the graph connected, by repeatedly absorbing the
smallest leftover component; the component-size vector increases strictly
in lexicographic order at every step, which bounds the iteration count.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field

from .errors import InvalidInputError, SearchBudgetExceeded
from .graphs import (
    Graph,
    Path,
    RootedGraph,
    bits_of,
    component_mask,
    components_masks,
    mask_of,
)


@dataclass(frozen=True)
class SearchBudget:
    """Limits for a single search call; both fields must be positive."""

    max_nodes_expanded: int = 2**62
    time_limit_ms: int = 2**62

    def __post_init__(self) -> None:
        if self.max_nodes_expanded <= 0 or self.time_limit_ms <= 0:
            raise InvalidInputError("budget fields must be positive")


EXHAUSTIVE = SearchBudget()


class _BudgetClock:
    __slots__ = ("remaining", "deadline", "ticks")

    def __init__(self, budget: SearchBudget):
        self.remaining = budget.max_nodes_expanded
        self.deadline = time.monotonic() + budget.time_limit_ms / 1000.0
        self.ticks = 0

    def tick(self) -> None:
        self.remaining -= 1
        if self.remaining < 0:
            raise SearchBudgetExceeded("node budget exhausted")
        self.ticks += 1
        if not self.ticks & 0xFF and time.monotonic() > self.deadline:
            raise SearchBudgetExceeded("time budget exhausted")


@dataclass(frozen=True)
class LinkagePair:
    """A witness of feasibility: a connected part holding the ``a_i`` plus a
    ``b1``-``b2`` path, vertex disjoint from each other.  ``a_part`` is empty
    exactly when ``m = 0``."""

    a_part: frozenset[int]
    b_path: Path

    def validate(self, rg: RootedGraph) -> None:
        from .graphs import is_connected_set

        g = rg.graph
        self.b_path.validate_in(g)
        if set(self.b_path.ends) != {rg.b1, rg.b2}:
            raise InvalidInputError("witness path does not join b1 and b2")
        if self.a_part & self.b_path.vertex_set:
            raise InvalidInputError("witness parts are not disjoint")
        if rg.m == 0:
            if self.a_part:
                raise InvalidInputError("a_part must be empty when m = 0")
            return
        if not set(rg.a_set) <= self.a_part:
            raise InvalidInputError("a_part misses a root")
        if not is_connected_set(g, self.a_part):
            raise InvalidInputError("a_part is not connected")


def _search_linkage(
    g: Graph,
    a_set: tuple[int, ...],
    b1: int,
    b2: int,
    banned: int,
    clock: _BudgetClock,
) -> tuple[int, list[int]] | None:
    """DFS over b1-b2 paths avoiding ``banned`` and the ``a_i``.

    Returns ``(a_component_mask, path)`` on success, ``None`` after the
    search space is exhausted.  Two prunes are applied, both conservative:
    deleting vertices never merges components, so a partial path that
    already separates the ``a_i``, or cuts its own endpoint off from ``b2``,
    can never be completed.
    """
    adj = g.adjacency_masks
    full = (1 << g.vertex_count) - 1
    alive_universe = full & ~banned
    a_mask = mask_of(a_set)
    if a_mask & banned or not alive_universe >> b1 & 1 or not alive_universe >> b2 & 1:
        raise InvalidInputError("roots may not be banned from the search")
    blocked = banned | a_mask

    path = [b1]
    on_path = 1 << b1
    iters = [iter(bits_of(adj[b1] & alive_universe & ~blocked))]
    a_seed = a_set[0] if a_set else -1

    while iters:
        v = next(iters[-1], -1)
        if v < 0:
            iters.pop()
            on_path &= ~(1 << path.pop())
            continue
        clock.tick()
        new_on = on_path | 1 << v
        rest = alive_universe & ~new_on
        if v == b2:
            if not a_set:
                return 0, path + [v]
            comp = component_mask(adj, rest, a_seed)
            if a_mask & ~comp == 0:
                return comp, path + [v]
            continue
        if not component_mask(adj, rest | 1 << v, v) >> b2 & 1:
            continue
        # A single root can never be split off, so the check matters for m >= 2 only.
        if len(a_set) >= 2 and a_mask & ~component_mask(adj, rest, a_seed):
            continue
        path.append(v)
        on_path = new_on
        iters.append(iter(bits_of(adj[v] & rest & ~blocked)))
    return None


def find_linkage_pair(rg: RootedGraph, budget: SearchBudget = EXHAUSTIVE) -> LinkagePair | None:
    """Search for a linkage pair; ``None`` proves there is none.

    On success ``a_part`` is the full component of ``G - P`` containing the
    ``a_i`` (empty for ``m = 0``).  Raises :class:`SearchBudgetExceeded` when
    the budget runs out before the search finishes; that outcome is
    deliberately distinct from both definite answers.
    """
    clock = _BudgetClock(budget)
    found = _search_linkage(rg.graph, rg.a_set, rg.b1, rg.b2, 0, clock)
    if found is None:
        return None
    comp, path = found
    return LinkagePair(frozenset(bits_of(comp)), Path(path))


def is_feasible(rg: RootedGraph) -> bool:
    """Exhaustive-budget wrapper over :func:`find_linkage_pair`."""
    return find_linkage_pair(rg) is not None


def _feasible_without(rg: RootedGraph, banned: int) -> bool:
    clock = _BudgetClock(EXHAUSTIVE)
    return _search_linkage(rg.graph, rg.a_set, rg.b1, rg.b2, banned, clock) is not None


def is_critically_feasible(rg: RootedGraph, u_set: frozenset[int] | set[int]) -> bool:
    """Whether ``rg`` is feasible and every linkage path must pass through ``u_set``.

    Decided through the deletion form: feasible, and deleting any single
    ``u`` destroys feasibility.  For ``m <= 1`` this provably coincides with
    the every-linkage-path reading; an empty ``u_set`` reduces to plain
    feasibility.
    """
    u_set = frozenset(u_set)
    for u in u_set:
        rg.graph._check_vertex(u)
    if u_set & rg.roots:
        raise InvalidInputError("u_set may not contain root vertices")
    if not is_feasible(rg):
        return False
    return all(not _feasible_without(rg, 1 << u) for u in sorted(u_set))


def _bfs_path(adj: tuple[int, ...], alive: int, start: int, goal: int) -> list[int] | None:
    """Deterministic shortest path inside ``alive`` (both endpoints included)."""
    parent = {start: -1}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == goal:
            out = []
            while x != -1:
                out.append(x)
                x = parent[x]
            return out[::-1]
        for y in bits_of(adj[x] & alive):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    return None


def two_linkage(
    g: Graph, s1: int, t1: int, s2: int, t2: int, budget: SearchBudget = EXHAUSTIVE
) -> tuple[Path, Path] | None:
    """Two vertex-disjoint paths ``s1 -> t1`` and ``s2 -> t2``, or ``None``.

    Exhaustive DFS over first paths; a second path is extracted by shortest
    search in the remainder.  The prunes (terminal reachability and
    second-pair connectivity in the remainder) are conservative for the
    same deletion-only reason as in :func:`find_linkage_pair`.
    """
    terminals = (s1, t1, s2, t2)
    for v in terminals:
        g._check_vertex(v)
    if len(set(terminals)) != 4:
        raise InvalidInputError("two_linkage needs four distinct terminals")
    clock = _BudgetClock(budget)
    adj = g.adjacency_masks
    full = (1 << g.vertex_count) - 1
    reserved = 1 << s2 | 1 << t2

    path = [s1]
    on_path = 1 << s1
    iters = [iter(bits_of(adj[s1] & full & ~reserved & ~on_path))]
    while iters:
        v = next(iters[-1], -1)
        if v < 0:
            iters.pop()
            on_path &= ~(1 << path.pop())
            continue
        clock.tick()
        new_on = on_path | 1 << v
        rest = full & ~new_on & ~reserved
        if v == t1:
            second = _bfs_path(adj, (full & ~new_on) | 1 << s2, s2, t2)
            if second is not None:
                return Path(path + [v]), Path(second)
            continue
        if not component_mask(adj, rest | 1 << v, v) >> t1 & 1:
            continue
        if not component_mask(adj, (full & ~new_on) | 1 << s2, s2) >> t2 & 1:
            continue
        path.append(v)
        on_path = new_on
        iters.append(iter(bits_of(adj[v] & full & ~reserved & ~new_on)))
    return None


@dataclass(frozen=True)
class RemovableReport:
    """Outcome of the removable-path improvement procedure.

    ``component_history`` records the ordered component-size vector of
    ``G - B`` at the start of every iteration; successful runs end with a
    single component and the vectors are strictly increasing.
    """

    path: Path | None
    failure: str | None
    iterations: int
    component_history: tuple[tuple[int, ...], ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return self.path is not None


def _induced_shortcut(g: Graph, path: Path) -> Path:
    """Shortest (hence induced) path between the ends inside ``G[V(path)]``."""
    alive = mask_of(path.vertices)
    start, goal = path.ends
    short = _bfs_path(g.adjacency_masks, alive, start, goal)
    return Path(short)


def _ordered_components(
    adj: tuple[int, ...], alive: int, anchor_seed: int
) -> list[int]:
    comps = components_masks(adj, alive)
    if anchor_seed >= 0:
        anchor = [c for c in comps if c >> anchor_seed & 1]
        rest = [c for c in comps if not c >> anchor_seed & 1]
        rest.sort(key=lambda c: (-bin(c).count("1"), (c & -c).bit_length()))
        return anchor + rest
    comps.sort(key=lambda c: (-bin(c).count("1"), (c & -c).bit_length()))
    return comps


def removable_path(rg: RootedGraph, budget: SearchBudget = EXHAUSTIVE) -> RemovableReport:
    """Find a ``b1``-``b2`` path avoiding the ``a_i`` whose removal leaves the
    graph connected.

    Starting from a linkage path kept induced throughout, each iteration
    absorbs the smallest leftover component of ``G - B``: its outermost
    attachments ``u1, u2`` on ``B`` span a maximal interval, some interior
    vertex of that interval must attach to an earlier component (else there
    is no legal move and a failure report says so), and the interval is
    replaced by an induced detour through the absorbed component.  Success
    is guaranteed on ``(2m+2)``-connected graphs; elsewhere the procedure
    reports the first step with no legal move.
    """
    g = rg.graph
    adj = g.adjacency_masks
    full = (1 << g.vertex_count) - 1
    pair = find_linkage_pair(rg, budget)
    if pair is None:
        return RemovableReport(None, "infeasible", 0)
    clock = _BudgetClock(budget)
    b_path = _induced_shortcut(g, pair.b_path)
    anchor_seed = rg.a_set[0] if rg.a_set else -1
    history: list[tuple[int, ...]] = []
    iterations = 0

    while True:
        clock.tick()
        alive = full & ~mask_of(b_path.vertices)
        comps = _ordered_components(adj, alive, anchor_seed)
        vec = tuple(bin(c).count("1") for c in comps)
        if history and not vec > history[-1]:
            return RemovableReport(None, "no-lexicographic-progress", iterations, tuple(history + [vec]))
        history.append(vec)
        if len(comps) <= 1:
            b_path.validate_in(g)
            return RemovableReport(b_path, None, iterations, tuple(history))

        last = comps[-1]
        boundary = 0
        m = last
        while m:
            low = m & -m
            boundary |= adj[low.bit_length() - 1]
            m ^= low
        attach = [v for v in b_path.vertices if boundary >> v & 1]
        if len(attach) < 2:
            return RemovableReport(None, "single-attachment-component", iterations, tuple(history))
        u1, u2 = attach[0], attach[-1]
        interior = b_path.segment(u1, u2, include_left=False, include_right=False).vertices
        move = None
        for comp in comps[:-1]:
            for u in interior:
                if adj[u] & comp:
                    move = u
                    break
            if move is not None:
                break
        if move is None:
            return RemovableReport(None, "no-anchored-interior-vertex", iterations, tuple(history))

        detour = _bfs_path(adj, last | 1 << u1 | 1 << u2, u1, u2)
        i1 = b_path.vertices.index(u1)
        i2 = b_path.vertices.index(u2)
        rerouted = Path(b_path.vertices[: i1 + 1] + tuple(detour[1:-1]) + b_path.vertices[i2:])
        rerouted.validate_in(g)
        b_path = _induced_shortcut(g, rerouted)
        iterations += 1
