"""Vertex connectivity via unit-vertex-capacity maximum flow.

Each vertex is split into an in-node and an out-node joined by a capacity-1
arc, so a maximum flow between two terminals counts internally disjoint
paths.  The connectivity of a graph is the minimum of that count over all
non-adjacent vertex pairs; a complete graph on ``n`` vertices reports
``n - 1`` by convention.
"""

from __future__ import annotations

from collections import deque

from .graphs import Graph


def _disjoint_path_count(g: Graph, s: int, t: int, limit: int) -> int:
    """Maximum number of internally disjoint s-t paths, capped at ``limit``."""
    n = g.vertex_count
    # Node 2v is the in-side of v, node 2v+1 the out-side.
    adj: list[list[list[int]]] = [[] for _ in range(2 * n)]

    def add_arc(a: int, b: int, cap: int) -> None:
        adj[a].append([b, cap, len(adj[b])])
        adj[b].append([a, 0, len(adj[a]) - 1])

    for v in range(n):
        if v != s and v != t:
            add_arc(2 * v, 2 * v + 1, 1)
    for u, v in g.edges:
        add_arc(2 * u + 1, 2 * v, 1)
        add_arc(2 * v + 1, 2 * u, 1)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        # BFS for one augmenting path; unit capacities, so flow grows by 1.
        parent: dict[int, tuple[int, int]] = {source: (-1, -1)}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for idx, (b, cap, _rev) in enumerate(adj[a]):
                if cap > 0 and b not in parent:
                    parent[b] = (a, idx)
                    queue.append(b)
        if sink not in parent:
            break
        node = sink
        while node != source:
            prev, idx = parent[node]
            arc = adj[prev][idx]
            arc[1] -= 1
            adj[node][arc[2]][1] += 1
            node = prev
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Minimum over non-adjacent pairs of the internally-disjoint-path count."""
    n = g.vertex_count
    if n <= 1:
        return 0
    best = n - 1
    for s in range(n):
        if g.degree(s) < best:
            best = g.degree(s)
        for t in range(s + 1, n):
            if g.has_edge(s, t):
                continue
            best = min(best, _disjoint_path_count(g, s, t, best))
            if best == 0:
                return 0
    return best


def has_connectivity_at_least(g: Graph, k: int) -> bool:
    """Early-exit check for ``vertex_connectivity(g) >= k``."""
    if k <= 0:
        return True
    n = g.vertex_count
    if n - 1 < k:
        return False
    for s in range(n):
        if g.degree(s) < k:
            return False
        for t in range(s + 1, n):
            if g.has_edge(s, t):
                continue
            if _disjoint_path_count(g, s, t, k) < k:
                return False
    return True
