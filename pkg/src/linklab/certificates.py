"""Collection certificates of infeasibility and the tight family audit.

Two certificate flavors share one report shape:

* the *linkage* certificate caps every member neighborhood at ``m + 1`` and
  bounds the augmented contraction by
  ``e <= (m+1) v - m^2/2 - 3m/2 - 1``;
* the *critical* certificate (for instances pinned to a vertex set ``U``)
  caps neighborhoods at ``m + 2`` and bounds
  ``e <= (m+2) v - m^2/2 - 5m/2 - 3 - |U|``.

All bound arithmetic is done in doubled integers so the half-integer terms
stay exact.  ``search_collection`` is an exhaustive family search over
connected candidate members: splitting a member into its components never
weakens a certificate, so the restriction loses nothing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Literal

from .errors import InvalidInputError, SearchBudgetExceeded
from .feasibility import (
    EXHAUSTIVE,
    LinkagePair,
    SearchBudget,
    _BudgetClock,
    find_linkage_pair,
    is_critically_feasible,
    is_feasible,
)
from .graphs import (
    Collection,
    Graph,
    RootedGraph,
    augment_rooted,
    bits_of,
    component_mask,
    components_masks,
    contract_collection,
    is_connected_set,
    mask_of,
    neighborhood,
    validate_collection,
)

CertificateKind = Literal["linkage", "critical"]


@dataclass(frozen=True)
class CertificateReport:
    """Arithmetic record of one certificate check.

    ``holds`` is true exactly when every member neighborhood respects
    ``neighborhood_cap`` and ``lhs_edges_doubled <= rhs_bound_doubled``.
    """

    kind: CertificateKind
    collection: Collection
    neighborhood_cap: int
    lhs_edges_doubled: int
    rhs_bound_doubled: int
    holds: bool

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "collection": self.collection.to_sorted_lists(),
            "neighborhood_cap": self.neighborhood_cap,
            "lhs_edges_doubled": self.lhs_edges_doubled,
            "rhs_bound_doubled": self.rhs_bound_doubled,
            "holds": self.holds,
        }


@dataclass(frozen=True)
class Verdict:
    """Outcome of deciding one rooted instance: exactly one payload is set.

    ``feasible`` carries the linkage pair, ``certified`` the certificate
    report, ``inconclusive`` the budget that ran out; a
    ``counterexample-candidate`` means the exhaustive search found neither,
    which signals an implementation bug, not new mathematics.
    """

    outcome: Literal["feasible", "certified", "counterexample-candidate", "inconclusive"]
    pair: LinkagePair | None = None
    report: CertificateReport | None = None
    budget: SearchBudget | None = None

    def __post_init__(self) -> None:
        populated = [
            self.pair is not None,
            self.report is not None,
            self.budget is not None,
        ]
        expected = [
            self.outcome == "feasible",
            self.outcome == "certified",
            self.outcome == "inconclusive",
        ]
        if populated != expected:
            raise InvalidInputError(f"verdict {self.outcome!r} has the wrong payload")

    def to_dict(self) -> dict:
        out: dict = {"outcome": self.outcome}
        if self.pair is not None:
            out["pair"] = {
                "a_part": sorted(self.pair.a_part),
                "b_path": list(self.pair.b_path.vertices),
            }
        if self.report is not None:
            out["report"] = self.report.to_dict()
        if self.budget is not None:
            out["budget"] = {
                "max_nodes_expanded": self.budget.max_nodes_expanded,
                "time_limit_ms": self.budget.time_limit_ms,
            }
        return out


def _max_member_neighborhood(g: Graph, x: Collection) -> int:
    return max((len(neighborhood(g, member)) for member in x), default=0)


def verify_linkage_collection(rg: RootedGraph, x: Collection) -> CertificateReport:
    """Check the linkage certificate for ``x`` against the rooted graph."""
    validate_collection(rg.graph, x, forbidden=rg.roots)
    m = rg.m
    contracted, _ = contract_collection(rg.graph, x)
    augmented = augment_rooted(rg, x)
    lhs = 2 * augmented.edge_count
    rhs = 2 * (m + 1) * contracted.vertex_count - m * m - 3 * m - 2
    holds = _max_member_neighborhood(rg.graph, x) <= m + 1 and lhs <= rhs
    return CertificateReport("linkage", x, m + 1, lhs, rhs, holds)


def verify_critical_collection(
    rg: RootedGraph, u_set: Iterable[int], x: Collection
) -> CertificateReport:
    """Check the critical certificate for ``x`` with pinned set ``u_set``."""
    u_set = frozenset(u_set)
    for u in u_set:
        rg.graph._check_vertex(u)
    if u_set & rg.roots:
        raise InvalidInputError("u_set may not contain root vertices")
    validate_collection(rg.graph, x, forbidden=rg.roots | u_set)
    m = rg.m
    contracted, _ = contract_collection(rg.graph, x)
    augmented = augment_rooted(rg, x)
    lhs = 2 * augmented.edge_count
    rhs = 2 * (m + 2) * contracted.vertex_count - m * m - 5 * m - 6 - 2 * len(u_set)
    holds = _max_member_neighborhood(rg.graph, x) <= m + 2 and lhs <= rhs
    return CertificateReport("critical", x, m + 2, lhs, rhs, holds)


def base_case_collection(rg: RootedGraph) -> Collection | None:
    """The constructive certificate for infeasible instances with ``m <= 1``.

    Split the graph around the component ``D`` holding ``b1`` (within
    ``G - a1`` when ``m = 1``): the two sides, minus the roots, form a valid
    collection whose linkage certificate always holds.  Returns ``None`` on
    feasible input or ``m >= 2``.
    """
    if rg.m not in (0, 1) or is_feasible(rg):
        return None
    g = rg.graph
    adj = g.adjacency_masks
    full = (1 << g.vertex_count) - 1
    if rg.m == 0:
        d_mask = component_mask(adj, full, rg.b1)
    else:
        d_mask = component_mask(adj, full & ~(1 << rg.a_set[0]), rg.b1)
    d_side = frozenset(bits_of(d_mask)) - {rg.b1}
    other_side = frozenset(range(g.vertex_count)) - frozenset(bits_of(d_mask)) - rg.roots
    return Collection([d_side, other_side])


def critical_base_collection(rg: RootedGraph, u_set: Iterable[int]) -> Collection:
    """The component collection certifying a critically feasible 0-rooted
    instance: the components of ``G - (U + {b1, b2})``.

    Every member then attaches only to two consecutive vertices of the
    pinned path, and the critical certificate holds with equality.
    """
    u_set = frozenset(u_set)
    if rg.m != 0:
        raise InvalidInputError("the critical base construction needs m = 0")
    if not is_critically_feasible(rg, u_set):
        raise InvalidInputError("instance is not critically feasible for the given u_set")
    g = rg.graph
    removed = mask_of(u_set | {rg.b1, rg.b2})
    alive = ((1 << g.vertex_count) - 1) & ~removed
    return Collection(frozenset(bits_of(c)) for c in components_masks(g.adjacency_masks, alive))


def _candidate_members(g: Graph, forbidden: frozenset[int], cap: int) -> list[frozenset[int]]:
    """All connected vertex sets avoiding ``forbidden`` with small neighborhoods,
    in (size, lexicographic) order."""
    allowed = [v for v in range(g.vertex_count) if v not in forbidden]
    out = []
    for size in range(1, len(allowed) + 1):
        for combo in itertools.combinations(allowed, size):
            member = frozenset(combo)
            if is_connected_set(g, member) and len(neighborhood(g, member)) <= cap:
                out.append(member)
    return out


def iter_collections(g: Graph, forbidden: frozenset[int], cap: int):
    """Every collection of connected members avoiding ``forbidden`` whose
    neighborhoods have at most ``cap`` vertices, in canonical depth-first
    order with the empty collection first."""
    yield Collection()
    candidates = _candidate_members(g, forbidden, cap)
    closed = [member | neighborhood(g, member) for member in candidates]
    k = len(candidates)
    compatible = [
        [not (closed[i] & candidates[j] or closed[j] & candidates[i]) for j in range(k)]
        for i in range(k)
    ]

    def rec(prefix: tuple[int, ...], start: int):
        for i in range(start, k):
            if all(compatible[i][j] for j in prefix):
                family = prefix + (i,)
                yield Collection(candidates[j] for j in family)
                yield from rec(family, i + 1)

    yield from rec((), 0)


def search_collection(
    rg: RootedGraph,
    kind: CertificateKind,
    u_set: Iterable[int] = (),
    budget: SearchBudget = EXHAUSTIVE,
) -> Collection | None:
    """Exhaustive search for a collection whose certificate holds.

    Families are enumerated depth-first over compatible candidate members in
    canonical order, the empty collection first; each family is tested as it
    is formed, and the first passing collection wins.  ``None`` is returned
    only after the whole space is exhausted.  Restricting candidates to
    connected members is lossless (see module docstring).
    """
    u_set = frozenset(u_set)
    if kind == "linkage":
        if u_set:
            raise InvalidInputError("the linkage certificate takes no u_set")
        cap = rg.m + 1
        forbidden = rg.roots

        def passes(coll: Collection) -> bool:
            return verify_linkage_collection(rg, coll).holds

    elif kind == "critical":
        cap = rg.m + 2
        forbidden = rg.roots | u_set

        def passes(coll: Collection) -> bool:
            return verify_critical_collection(rg, u_set, coll).holds

    else:
        raise InvalidInputError(f"unknown certificate kind {kind!r}")

    clock = _BudgetClock(budget)
    for coll in iter_collections(rg.graph, forbidden, cap):
        clock.tick()
        if passes(coll):
            return coll
    return None


def theorem_check(rg: RootedGraph, budget: SearchBudget = EXHAUSTIVE) -> Verdict:
    """Decide an instance: a feasibility witness or a linkage certificate.

    A ``counterexample-candidate`` verdict means both exhaustive searches
    completed empty-handed; since every instance provably admits one of the
    two, that verdict flags an implementation bug.
    """
    try:
        pair = find_linkage_pair(rg, budget)
        if pair is not None:
            return Verdict("feasible", pair=pair)
        coll = search_collection(rg, "linkage", budget=budget)
    except SearchBudgetExceeded:
        return Verdict("inconclusive", budget=budget)
    if coll is not None:
        return Verdict("certified", report=verify_linkage_collection(rg, coll))
    return Verdict("counterexample-candidate")


def gmk_graph(m: int, k: int) -> RootedGraph:
    """The tight-family member with parameters ``m, k``.

    Vertices ``a_1..a_m`` (ids ``0..m-1``), ``b1`` (id ``m``), ``b2``
    (id ``m+1``) and ``v_1..v_k`` (ids ``m+2..``): an induced ``b1``-``b2``
    path through the ``v_j``, every ``a_i`` adjacent to all path vertices,
    a clique on ``a_1..a_{m-1}``, and ``a_m`` non-adjacent to the other
    ``a_i``.
    """
    if m < 0 or k < 0:
        raise InvalidInputError("gmk_graph needs m, k >= 0")
    b1, b2 = m, m + 1
    spine = [b1, *range(m + 2, m + 2 + k), b2]
    edges = list(zip(spine, spine[1:]))
    edges.extend((a, v) for a in range(m) for v in spine)
    edges.extend(itertools.combinations(range(m - 1), 2))
    return RootedGraph(Graph.from_edges(m + k + 2, edges), tuple(range(m)), b1, b2)


@dataclass(frozen=True)
class GmkAuditReport:
    """Audit of one tight-family member: infeasibility plus exact equality of
    the augmented edge count with the certificate bound."""

    m: int
    k: int
    infeasible: bool
    edges_doubled: int
    expected_edges_doubled: int
    certificate: CertificateReport
    mismatches: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "infeasible": self.infeasible,
            "edges_doubled": self.edges_doubled,
            "expected_edges_doubled": self.expected_edges_doubled,
            "certificate": self.certificate.to_dict(),
            "mismatches": list(self.mismatches),
            "ok": self.ok,
        }


def gmk_audit(m: int, k: int) -> GmkAuditReport:
    """Check a tight-family member: infeasible, and the empty collection's
    certificate holds with exact equality ``2e = 2(m+1)(m+k+2) - m^2 - 3m - 2``."""
    if m < 1:
        raise InvalidInputError("the audit needs m >= 1")
    rg = gmk_graph(m, k)
    feasible = is_feasible(rg)
    edges_doubled = 2 * augment_rooted(rg, Collection()).edge_count
    expected = 2 * (m + 1) * (m + k + 2) - m * m - 3 * m - 2
    report = verify_linkage_collection(rg, Collection())
    mismatches = []
    if feasible:
        mismatches.append("instance is feasible; the tight family member should not be")
    if edges_doubled != expected:
        mismatches.append(
            f"doubled augmented edge count {edges_doubled} != formula value {expected}"
        )
    if not report.holds:
        mismatches.append("empty-collection certificate does not hold")
    if report.lhs_edges_doubled != report.rhs_bound_doubled:
        mismatches.append(
            f"certificate not tight: lhs {report.lhs_edges_doubled} != rhs {report.rhs_bound_doubled}"
        )
    return GmkAuditReport(m, k, not feasible, edges_doubled, expected, report, tuple(mismatches))
