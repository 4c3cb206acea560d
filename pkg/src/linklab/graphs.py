"""Core graph types and the contraction operators.

Everything here is an immutable value: graphs, rooted graphs, vertex-set
collections and paths are all frozen after construction, and every operation
is a pure function.  Vertex ids are dense integers ``0..n-1``.

The two contraction operators are the heart of the module:

* ``contract_collection`` deletes each member of a collection and adds a
  clique on its neighborhood, returning the contracted graph together with
  the relabeling map for the surviving vertices.
* ``augment_rooted`` additionally joins every pair of root vertices except
  the distinguished pair ``(b1, b2)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import InvalidCollectionError, InvalidInputError


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..vertex_count-1``.

    Edges are canonical ``(u, v)`` tuples with ``u < v``.  Self-loops and
    duplicate edges are rejected at construction time.
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InvalidInputError("vertex_count must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise InvalidInputError(f"edge ({u}, {v}) is not canonical or out of range")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, canonicalizing edge endpoint order."""
        canon = set()
        for u, v in edges:
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            canon.add((u, v) if u < v else (v, u))
        return cls(vertex_count, frozenset(canon))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise InvalidInputError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path_graph(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighborhoods as bitmasks; the workhorse for search code."""
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return (u, v) in self.edges if u < v else (v, u) in self.edges

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def add_edges(self, new_edges: Iterable[tuple[int, int]]) -> "Graph":
        """A copy of this graph with the given edges added (duplicates ignored)."""
        return Graph.from_edges(self.vertex_count, itertools.chain(self.edges, new_edges))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise InvalidInputError(f"vertex {v} out of range [0, {self.vertex_count})")


@dataclass(frozen=True)
class RootedGraph:
    """A graph with distinguished roots ``a_1..a_m`` and a pair ``b1, b2``.

    ``m = len(a_set)`` may be zero.  All roots must be distinct vertices.
    """

    graph: Graph
    a_set: tuple[int, ...]
    b1: int
    b2: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a_set", tuple(self.a_set))
        roots = (*self.a_set, self.b1, self.b2)
        for v in roots:
            self.graph._check_vertex(v)
        if len(set(roots)) != len(roots):
            raise InvalidInputError(f"roots must be distinct, got a={self.a_set} b=({self.b1}, {self.b2})")

    @property
    def m(self) -> int:
        return len(self.a_set)

    @property
    def roots(self) -> frozenset[int]:
        return frozenset((*self.a_set, self.b1, self.b2))


@dataclass(frozen=True)
class Collection:
    """A family of pairwise non-adjacent, disjoint vertex sets.

    Empty member sets are dropped at construction (they never affect a
    contraction).  Members are kept in a canonical order: by size, then by
    sorted vertex tuple.  Validity against a host graph and a forbidden set
    is checked separately by :func:`validate_collection`.
    """

    members: tuple[frozenset[int], ...]

    def __init__(self, members: Iterable[Iterable[int]] = ()):
        sets = {frozenset(m) for m in members}
        sets.discard(frozenset())
        ordered = sorted(sets, key=lambda s: (len(s), sorted(s)))
        object.__setattr__(self, "members", tuple(ordered))

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def support(self) -> frozenset[int]:
        out: set[int] = set()
        for m in self.members:
            out |= m
        return frozenset(out)

    def to_sorted_lists(self) -> list[list[int]]:
        """JSON-friendly canonical form: sorted arrays of sorted arrays."""
        return sorted(sorted(m) for m in self.members)


@dataclass(frozen=True)
class Path:
    """A simple path given by its vertex sequence.

    Consecutive vertices must be adjacent in the host graph; validity is
    checked by :meth:`validate_in` since a path does not carry its host.
    """

    vertices: tuple[int, ...]

    def __init__(self, vertices: Iterable[int]):
        object.__setattr__(self, "vertices", tuple(vertices))
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidInputError("path repeats a vertex")

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def ends(self) -> tuple[int, int]:
        if not self.vertices:
            raise InvalidInputError("empty path has no end vertices")
        return self.vertices[0], self.vertices[-1]

    def validate_in(self, g: Graph) -> None:
        for v in self.vertices:
            g._check_vertex(v)
        for u, v in zip(self.vertices, self.vertices[1:]):
            if not g.has_edge(u, v):
                raise InvalidInputError(f"consecutive path vertices {u}, {v} are not adjacent")

    def segment(self, u: int, v: int, *, include_left: bool = True, include_right: bool = True) -> "Path":
        """The subpath between ``u`` and ``v`` in path order.

        The closed/open variants select whether the end vertices themselves
        are included, mirroring interval notation on paths.  ``u`` and ``v``
        may be given in either order; the result follows this path's order.
        """
        try:
            i, j = self.vertices.index(u), self.vertices.index(v)
        except ValueError as exc:
            raise InvalidInputError(f"segment endpoints {u}, {v} must lie on the path") from exc
        if i > j:
            i, j = j, i
            include_left, include_right = include_right, include_left
        lo = i if include_left else i + 1
        hi = j + 1 if include_right else j
        return Path(self.vertices[lo:hi] if lo <= hi else ())

    def reversed(self) -> "Path":
        return Path(self.vertices[::-1])


# ---------------------------------------------------------------------------
# Bitmask helpers (shared by the search modules).

def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def component_mask(adj: tuple[int, ...], alive: int, seed: int) -> int:
    """The component of ``seed`` within ``alive``, as a bitmask.

    ``seed`` must have its bit set in ``alive``.
    """
    comp = 1 << seed
    frontier = comp
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & alive & ~comp
        comp |= frontier
    return comp


def components_masks(adj: tuple[int, ...], alive: int) -> list[int]:
    """All components within ``alive``, ordered by smallest contained vertex."""
    out = []
    rest = alive
    while rest:
        seed = (rest & -rest).bit_length() - 1
        comp = component_mask(adj, alive, seed)
        out.append(comp)
        rest &= ~comp
    return out


# ---------------------------------------------------------------------------
# Operations.

def neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``s`` adjacent to some vertex of ``s``."""
    s = frozenset(s)
    for v in s:
        g._check_vertex(v)
    out: set[int] = set()
    for v in s:
        out |= g.adjacency[v]
    return frozenset(out - s)


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    return neighborhood(g, s) | s


def is_connected_set(g: Graph, s: Iterable[int]) -> bool:
    """Whether ``s`` induces a connected subgraph (empty sets count as connected)."""
    s = frozenset(s)
    if not s:
        return True
    for v in s:
        g._check_vertex(v)
    alive = mask_of(s)
    seed = min(s)
    return component_mask(g.adjacency_masks, alive, seed) == alive


def components(g: Graph) -> list[frozenset[int]]:
    """Partition of the vertices into components, ordered by smallest vertex."""
    alive = (1 << g.vertex_count) - 1
    return [frozenset(bits_of(m)) for m in components_masks(g.adjacency_masks, alive)]


def validate_collection(g: Graph, x: Collection, forbidden: Iterable[int] = ()) -> None:
    """Raise unless ``x`` is a valid collection avoiding ``forbidden``.

    Validity means: every member is a set of vertices of ``g`` disjoint from
    ``forbidden``, and for distinct members the closed neighborhood of one
    never meets the other.
    """
    forbidden = frozenset(forbidden)
    closed = []
    for member in x.members:
        for v in member:
            g._check_vertex(v)
        hit = member & forbidden
        if hit:
            raise InvalidCollectionError(f"member {sorted(member)} intersects forbidden set at {sorted(hit)}")
        closed.append(closed_neighborhood(g, member))
    for i, j in itertools.combinations(range(len(x.members)), 2):
        if closed[i] & x.members[j] or closed[j] & x.members[i]:
            raise InvalidCollectionError(
                f"members {sorted(x.members[i])} and {sorted(x.members[j])} touch each other"
            )


def normalize_connected(g: Graph, x: Collection) -> Collection:
    """Split every member into the vertex sets of its components.

    Splitting preserves collection validity, never increases any member
    neighborhood and never adds contracted edges, so certificate predicates
    are preserved.  The library accepts both forms; this helper converts to
    the all-connected one.
    """
    out: list[frozenset[int]] = []
    for member in x.members:
        alive = mask_of(member)
        out.extend(frozenset(bits_of(c)) for c in components_masks(g.adjacency_masks, alive))
    return Collection(out)


def contract_collection(g: Graph, x: Collection) -> tuple[Graph, dict[int, int]]:
    """Delete each member and add a clique on its neighborhood.

    Returns the contracted graph plus the map from surviving old ids to new
    dense ids.  Raises :class:`InvalidCollectionError` if ``x`` violates the
    collection invariant in ``g``.
    """
    validate_collection(g, x)
    removed = x.support
    survivors = [v for v in range(g.vertex_count) if v not in removed]
    relabel = {v: i for i, v in enumerate(survivors)}
    new_edges: set[tuple[int, int]] = set()
    for u, v in g.edges:
        if u in relabel and v in relabel:
            new_edges.add((relabel[u], relabel[v]))
    for member in x.members:
        boundary = sorted(relabel[v] for v in neighborhood(g, member))
        new_edges.update(itertools.combinations(boundary, 2))
    return Graph(len(survivors), frozenset(new_edges)), relabel


def augment_rooted(rg: RootedGraph, x: Collection) -> Graph:
    """The contracted graph plus all edges among roots except ``b1 b2``."""
    contracted, relabel = contract_collection(rg.graph, x)
    for r in rg.roots:
        if r not in relabel:
            raise InvalidCollectionError(f"collection member contains root vertex {r}")
    new_roots = sorted(relabel[r] for r in rg.roots)
    banned = tuple(sorted((relabel[rg.b1], relabel[rg.b2])))
    extra = [e for e in itertools.combinations(new_roots, 2) if e != banned]
    return contracted.add_edges(extra)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """The subgraph induced on ``keep``, plus the old-to-new relabeling map."""
    keep = sorted(set(keep))
    for v in keep:
        g._check_vertex(v)
    relabel = {v: i for i, v in enumerate(keep)}
    edges = frozenset(
        (relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel
    )
    return Graph(len(keep), edges), relabel


def delete_vertices(g: Graph, drop: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    drop = set(drop)
    return induced_subgraph(g, (v for v in range(g.vertex_count) if v not in drop))
