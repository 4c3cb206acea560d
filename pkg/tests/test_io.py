"""Edge-list and graph6 round trips, parse errors, root-tuple syntax."""

import pytest
from hypothesis import given

from linklab.errors import ParseError
from linklab.graphio import (
    parse_edge_list,
    parse_graph,
    parse_graph6,
    parse_roots,
    serialize_edge_list,
    serialize_graph,
    serialize_graph6,
)
from linklab.graphs import Graph
from strategies import graphs


class TestEdgeList:
    def test_parse_path(self):
        assert parse_edge_list("3 2\n0 1\n1 2") == Graph.path_graph(3)

    def test_vertex_out_of_range(self):
        with pytest.raises(ParseError, match="line 2.*out of range"):
            parse_edge_list("2 1\n0 2")

    def test_malformed_header(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_edge_list("nope\n")

    def test_duplicate_edge(self):
        with pytest.raises(ParseError, match="line 3.*duplicate"):
            parse_edge_list("3 2\n0 1\n0 1")

    def test_unordered_endpoints_rejected(self):
        with pytest.raises(ParseError, match="u < v"):
            parse_edge_list("3 1\n1 0")

    def test_edge_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_edge_list("3 2\n0 1")

    @given(graphs(max_n=8))
    def test_round_trip(self, g):
        assert parse_edge_list(serialize_edge_list(g)) == g

    @given(graphs(max_n=8))
    def test_serialize_idempotent_after_parse(self, g):
        text = serialize_edge_list(g)
        assert serialize_edge_list(parse_edge_list(text)) == text


class TestGraph6:
    def test_known_value_round_trip(self):
        # "D?{" decodes to a 5-vertex graph and re-encodes identically.
        g = parse_graph6("D?{")
        assert g.vertex_count == 5
        assert serialize_graph6(g) == "D?{"

    def test_header_stripped(self):
        assert parse_graph6(">>graph6<<D?{") == parse_graph6("D?{")

    def test_bad_character(self):
        with pytest.raises(ParseError, match="character"):
            parse_graph6("D?\x1f")

    def test_wrong_length(self):
        with pytest.raises(ParseError, match="needs"):
            parse_graph6("D?")

    def test_nonzero_padding(self):
        # 2 vertices need 1 bit; the remaining 5 bits must be zero.
        with pytest.raises(ParseError, match="padding"):
            parse_graph6("A" + chr(63 + 1))

    @given(graphs(max_n=9))
    def test_round_trip(self, g):
        assert parse_graph6(serialize_graph6(g)) == g

    def test_matches_reference_encoder(self):
        import networkx as nx

        for n, edges in [(5, [(0, 1), (1, 2), (2, 3), (3, 4)]), (4, [(0, 1), (2, 3)]), (1, []), (0, [])]:
            g = Graph.from_edges(n, edges)
            nxg = nx.Graph()
            nxg.add_nodes_from(range(n))
            nxg.add_edges_from(edges)
            ref = nx.to_graph6_bytes(nxg, header=False).decode().strip()
            assert serialize_graph6(g) == ref
            assert parse_graph6(ref) == g

    def test_long_size_encoding(self):
        # n >= 63 switches to the three-character size field.
        import random

        import networkx as nx

        rng = random.Random("g6-long")
        n = 70
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.05]
        g = Graph.from_edges(n, edges)
        text = serialize_graph6(g)
        assert text.startswith("~")
        assert parse_graph6(text) == g
        nxg = nx.Graph()
        nxg.add_nodes_from(range(n))
        nxg.add_edges_from(edges)
        assert text == nx.to_graph6_bytes(nxg, header=False).decode().strip()


class TestAutodetect:
    def test_dispatch(self):
        assert parse_graph("3 2\n0 1\n1 2") == Graph.path_graph(3)
        assert parse_graph(serialize_graph6(Graph.cycle(4))) == Graph.cycle(4)

    def test_explicit_format(self):
        assert parse_graph("3 0", fmt="edgelist") == Graph(3)
        with pytest.raises(ParseError):
            parse_graph("3 0", fmt="nonsense")

    def test_serialize_dispatch(self):
        g = Graph.cycle(4)
        assert parse_graph(serialize_graph(g, "edgelist")) == g
        assert parse_graph(serialize_graph(g, "graph6")) == g


class TestRoots:
    def test_compact_syntax(self):
        assert parse_roots("a:1,2,3 b:0,4") == ((1, 2, 3), 0, 4)

    def test_m_zero(self):
        assert parse_roots("b:0,4") == ((), 0, 4)
        assert parse_roots("a: b:0,4") == ((), 0, 4)

    def test_json_syntax(self):
        assert parse_roots('{"a": [3, 1], "b1": 0, "b2": 2}') == ((3, 1), 0, 2)

    def test_bad_tokens(self):
        with pytest.raises(ParseError):
            parse_roots("a:1 c:2")
        with pytest.raises(ParseError):
            parse_roots("a:x b:0,1")
        with pytest.raises(ParseError):
            parse_roots("a:1")
        with pytest.raises(ParseError):
            parse_roots('{"a": [], "b1": 0}')
