import random
from itertools import combinations

import networkx as nx
import pytest

from coronacolor import (
    ColoringDocument,
    CoronaMap,
    TotalColoring,
    color_corona,
    coloring_document,
    document_coloring,
    document_graph,
    emit_coloring_json,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    new_graph,
    parse_coloring_json,
    parse_edge_list,
    parse_graph6,
    verify_npd,
)
from coronacolor.errors import (
    BadCharError,
    ColorOutOfRangeError,
    DimensionMismatchError,
    DuplicateEdgeError,
    EdgeListParseError,
    SchemaViolationError,
    SelfLoopError,
    TrailingGarbageError,
    TruncatedPayloadError,
)


def test_graph6_hand_decoded_literals():
    g = parse_graph6("A_")
    assert g.n == 2 and g.edges == ((0, 1),)
    g = parse_graph6("@")
    assert g.n == 1 and not g.edges
    g = parse_graph6("A?")
    assert g.n == 2 and not g.edges
    assert parse_graph6(">>graph6<<A_").edges == ((0, 1),)
    assert parse_graph6("A_\n").edges == ((0, 1),)


def test_graph6_errors():
    with pytest.raises(BadCharError):
        parse_graph6("A!")  # '!' sits below the graph6 alphabet
    with pytest.raises(TruncatedPayloadError):
        parse_graph6("B")  # n=3 needs one payload character
    with pytest.raises(TrailingGarbageError):
        parse_graph6("A__")
    with pytest.raises(TruncatedPayloadError):
        parse_graph6("")


def test_graph6_round_trip_against_networkx_all_n_le_6():
    for n in range(0, 7):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
            g = new_graph(n, edges)
            s = emit_graph6(g)
            assert parse_graph6(s) == g
            ng = nx.Graph()
            ng.add_nodes_from(range(n))
            ng.add_edges_from(edges)
            assert nx.to_graph6_bytes(ng, header=False).decode().strip() == s
            decoded = nx.from_graph6_bytes(s.encode())
            assert decoded.number_of_nodes() == n
            assert set(decoded.edges()) == set(edges)


def test_graph6_long_size_form():
    g = new_graph(70, [(0, 69)])
    assert parse_graph6(emit_graph6(g)) == g


def test_edge_list_round_trip():
    assert parse_edge_list("2 1\n0 1\n") == new_graph(2, [(0, 1)])
    assert parse_edge_list("3 3\n0 1\n1 2\n0 2") == new_graph(3, [(0, 1), (1, 2), (0, 2)])
    text = "  3 1   # a triangle minus two edges\n\n# comment line\n 0   2\n"
    assert parse_edge_list(text) == new_graph(3, [(0, 2)])
    g = new_graph(4, [(0, 1), (2, 3)])
    assert parse_edge_list(emit_edge_list(g)) == g


def test_edge_list_errors_carry_line_numbers():
    with pytest.raises(SelfLoopError, match="line 2"):
        parse_edge_list("2 1\n0 0")
    with pytest.raises(DuplicateEdgeError, match="line 3"):
        parse_edge_list("2 2\n0 1\n1 0")
    with pytest.raises(EdgeListParseError, match="line 1"):
        parse_edge_list("nope\n")
    with pytest.raises(EdgeListParseError):
        parse_edge_list("2 2\n0 1\n")  # fewer edges than promised
    with pytest.raises(EdgeListParseError):
        parse_edge_list("")


def test_emit_dot():
    g = new_graph(2, [(0, 1)])
    plain = emit_dot(g)
    assert "n0 -- n1" in plain and "label" in plain
    col = TotalColoring((1, 2), (3,), 3)
    dotted = emit_dot(g, col)
    assert 'label="0\\n1"' in dotted and 'label="3"' in dotted
    with pytest.raises(DimensionMismatchError):
        emit_dot(g, TotalColoring((1,), (3,), 3))


def test_emit_dot_corona_labels():
    res = color_corona(new_graph(2, [(0, 1)]), new_graph(2, [(0, 1)]))
    text = emit_dot(res.graph, res.coloring, res.corona_map)
    assert 'v_1' in text and 'u_2^1' in text
    assert text.count("--") == 7


def test_coloring_json_round_trip_minimal():
    doc = ColoringDocument(2, ((0, 1),), (1, 2), (3,), 3)
    assert parse_coloring_json(emit_coloring_json(doc)) == doc
    doc2 = ColoringDocument(2, ((0, 1),), (1, 2), (3,), 3, CoronaMap(1, 1))
    assert parse_coloring_json(emit_coloring_json(doc2)) == doc2


def test_coloring_json_round_trip_random_documents():
    rng = random.Random(3)
    for trial in range(100):
        n = rng.randint(1, 8)
        pairs = list(combinations(range(n), 2))
        rng.shuffle(pairs)
        edges = tuple(sorted(pairs[: rng.randint(0, len(pairs))]))
        mx = rng.randint(1, 12)
        doc = ColoringDocument(
            n,
            edges,
            tuple(rng.randint(1, mx) for _ in range(n)),
            tuple(rng.randint(1, mx) for _ in edges),
            mx,
        )
        assert parse_coloring_json(emit_coloring_json(doc)) == doc


def test_coloring_json_rejects_bad_documents():
    doc = ColoringDocument(2, ((0, 1),), (1, 2), (3,), 3)
    good = emit_coloring_json(doc)
    with pytest.raises(ColorOutOfRangeError):
        parse_coloring_json(good.replace('"vertex_colors": [\n    1,', '"vertex_colors": [\n    0,'))
    with pytest.raises(SchemaViolationError):
        parse_coloring_json("{}")
    with pytest.raises(SchemaViolationError):
        parse_coloring_json("[1, 2]")
    with pytest.raises(SchemaViolationError):
        parse_coloring_json(good.replace('"max_color": 3', '"max_color": 3, "extra": 1'))
    with pytest.raises(SchemaViolationError):
        parse_coloring_json('{"n": 2, "edges": [[1, 0]], "vertex_colors": [1, 2], "edge_colors": [3], "max_color": 3}')
    with pytest.raises(SchemaViolationError):
        parse_coloring_json('{"n": 2, "edges": [[0, 1]], "vertex_colors": [1], "edge_colors": [3], "max_color": 3}')


def test_constructed_coloring_document_reverifies():
    res = color_corona(new_graph(2, [(0, 1)]), new_graph(2, [(0, 1)]))
    doc = coloring_document(res.graph, res.coloring, res.corona_map)
    back = parse_coloring_json(emit_coloring_json(doc))
    assert back == doc
    g = document_graph(back)
    assert g == res.graph
    report = verify_npd(g, document_coloring(back))
    assert report.ok
