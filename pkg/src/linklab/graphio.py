"""Graph serialization: edge-list text, graph6, and root-tuple parsing.

Edge-list format: a header line ``n m`` followed by ``m`` lines ``u v`` with
``0 <= u < v < n``.  graph6 is the standard printable-ASCII encoding, one
graph per line; the optional ``>>graph6<<`` header is accepted and stripped.

Root tuples are given either as ``a:1,2,3 b:0,4`` (the ``a:`` part may be
omitted when m = 0) or as JSON ``{"a": [...], "b1": ..., "b2": ...}``.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .graphs import Graph

_G6_HEADER = ">>graph6<<"


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError("missing 'n m' header", line=1)
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"expected header 'n m', got {lines[0]!r}", line=1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"non-integer header fields in {lines[0]!r}", line=1) from None
    if n < 0 or m < 0:
        raise ParseError("header counts must be non-negative", line=1)
    edges: set[tuple[int, int]] = set()
    body = [(i + 2, ln) for i, ln in enumerate(lines[1:]) if ln.strip()]
    if len(body) != m:
        raise ParseError(f"header promises {m} edges but {len(body)} edge lines found", line=1)
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {ln!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex id in {ln!r}", line=lineno) from None
        if not 0 <= u < n:
            raise ParseError(f"vertex {u} out of range [0, {n})", line=lineno)
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range [0, {n})", line=lineno)
        if u >= v:
            raise ParseError(f"edge endpoints must satisfy u < v, got {u} {v}", line=lineno)
        if (u, v) in edges:
            raise ParseError(f"duplicate edge {u} {v}", line=lineno)
        edges.add((u, v))
    return Graph(n, frozenset(edges))


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def _g6_encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0))
    raise ParseError(f"graph too large for this encoder: {n} vertices")


def serialize_graph6(g: Graph) -> str:
    n = g.vertex_count
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (u, v) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i : i + 6]:
            group = (group << 1) | b
        chars.append(chr(group + 63))
    return _g6_encode_size(n) + "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :].strip()
    if not s:
        raise ParseError("empty graph6 string", line=1)
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", line=1)
    if s[0] == "~":
        if len(s) < 4:
            raise ParseError("truncated graph6 size field", line=1)
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        data = s[4:]
    else:
        n = ord(s[0]) - 63
        data = s[1:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(data) != expected:
        raise ParseError(
            f"graph6 body for {n} vertices needs {expected} characters, got {len(data)}", line=1
        )
    bits = []
    for ch in data:
        group = ord(ch) - 63
        bits.extend((group >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits in graph6 body", line=1)
    edges = set()
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.add((u, v))
            idx += 1
    return Graph(n, frozenset(edges))


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse either format; auto-detects when ``fmt`` is None.

    graph6 strings never contain spaces, so any line with a space in its
    first non-empty line is treated as edge-list input.
    """
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt is not None:
        raise ParseError(f"unknown graph format {fmt!r}")
    stripped = text.strip()
    first = stripped.splitlines()[0] if stripped else ""
    if " " in first.strip() or "\t" in first:
        return parse_edge_list(text)
    return parse_graph6(text)


def serialize_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return serialize_edge_list(g)
    if fmt == "graph6":
        return serialize_graph6(g)
    raise ParseError(f"unknown graph format {fmt!r}")


def parse_roots(text: str) -> tuple[tuple[int, ...], int, int]:
    """Parse a root tuple; returns ``(a_set, b1, b2)``.

    Accepts ``a:1,2,3 b:0,4`` (``a:`` optional) or JSON with keys
    ``a``, ``b1``, ``b2``.
    """
    s = text.strip()
    if s.startswith("{"):
        try:
            obj = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON root tuple: {exc}") from None
        try:
            a = tuple(int(v) for v in obj.get("a", []))
            return a, int(obj["b1"]), int(obj["b2"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad JSON root tuple: {exc}") from None
    a: tuple[int, ...] = ()
    b: tuple[int, int] | None = None
    for token in s.split():
        try:
            if token.startswith("a:"):
                body = token[2:]
                a = tuple(int(v) for v in body.split(",")) if body else ()
            elif token.startswith("b:"):
                parts = token[2:].split(",")
                if len(parts) != 2:
                    raise ParseError(f"expected b:<b1>,<b2>, got {token!r}")
                b = (int(parts[0]), int(parts[1]))
            else:
                raise ParseError(f"unrecognized root token {token!r}")
        except ParseError:
            raise
        except ValueError:
            raise ParseError(f"non-integer vertex id in root token {token!r}") from None
    if b is None:
        raise ParseError("root tuple must include b:<b1>,<b2>")
    return a, b[0], b[1]
