"""Graph and coloring interchange: graph6, edge lists, DOT and JSON documents."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    BadCharError,
    ColorOutOfRangeError,
    CoronaColorError,
    DimensionMismatchError,
    DuplicateEdgeError,
    EdgeListParseError,
    EndpointOutOfRangeError,
    SchemaViolationError,
    SelfLoopError,
    TrailingGarbageError,
    TruncatedPayloadError,
)
from .graph import CoronaMap, Graph, GVertex, new_graph
from .search import TotalColoring

GRAPH6_HEADER = ">>graph6<<"


def _decode_size(vals: list[int]) -> tuple[int, int]:
    if vals[0] != 63:
        return vals[0], 1
    if len(vals) < 4:
        raise TruncatedPayloadError("graph6 size prefix cut short")
    if vals[1] != 63:
        return (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    if len(vals) < 8:
        raise TruncatedPayloadError("graph6 size prefix cut short")
    n = 0
    for x in vals[2:8]:
        n = (n << 6) | x
    return n, 8


def _encode_size(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n <= 68719476735:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError("vertex count too large for graph6")


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line; the ">>graph6<<" header is optional."""
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise TruncatedPayloadError("empty graph6 text")
    vals = []
    for ch in s:
        x = ord(ch) - 63
        if not 0 <= x <= 63:
            raise BadCharError(f"character {ch!r} outside the graph6 alphabet")
        vals.append(x)
    n, idx = _decode_size(vals)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(vals) - idx
    if have < need:
        raise TruncatedPayloadError(f"need {need} payload characters, got {have}")
    if have > need:
        raise TrailingGarbageError(f"{have - need} characters past the adjacency payload")
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            group, off = divmod(bit, 6)
            if (vals[idx + group] >> (5 - off)) & 1:
                edges.append((i, j))
            bit += 1
    if need:
        pad = 6 * need - nbits
        if pad and vals[idx + need - 1] & ((1 << pad) - 1):
            raise TrailingGarbageError("nonzero padding bits")
    return new_graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line (no header)."""
    vals = _encode_size(g.n)
    nbits = g.n * (g.n - 1) // 2
    groups = [0] * ((nbits + 5) // 6)
    eset = set(g.edges)
    bit = 0
    for j in range(1, g.n):
        for i in range(j):
            if (i, j) in eset:
                group, off = divmod(bit, 6)
                groups[group] |= 1 << (5 - off)
            bit += 1
    return "".join(chr(x + 63) for x in vals + groups)


def parse_edge_list(text: str) -> Graph:
    """Parse "n m" plus m lines "a b"; '#' starts a comment, whitespace is free."""
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise EdgeListParseError(f"line {ln}: expected 'n m' header")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListParseError(f"line {ln}: header fields must be integers") from None
            if n < 0 or m < 0:
                raise EdgeListParseError(f"line {ln}: header fields must be nonnegative")
            continue
        if len(parts) != 2:
            raise EdgeListParseError(f"line {ln}: expected 'a b'")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"line {ln}: endpoints must be integers") from None
        if len(edges) >= m:
            raise EdgeListParseError(f"line {ln}: more than {m} edges")
        if not (0 <= a < n and 0 <= b < n):
            raise EndpointOutOfRangeError(f"line {ln}: endpoint outside 0..{n - 1}")
        if a == b:
            raise SelfLoopError(f"line {ln}: self-loop at vertex {a}")
        e = (a, b) if a < b else (b, a)
        if e in seen:
            raise DuplicateEdgeError(f"line {ln}: duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    if n is None:
        raise EdgeListParseError("missing 'n m' header")
    if len(edges) != m:
        raise EdgeListParseError(f"expected {m} edges, found {len(edges)}")
    return new_graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


PALETTE = (
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
)


def emit_dot(g: Graph, coloring: TotalColoring | None = None, corona_map: CoronaMap | None = None) -> str:
    """DOT source; corona roles become v_j / u_i^j labels, colors become labels
    plus a fixed fill palette cycled by color number."""
    if coloring is not None and (
        len(coloring.vertex_colors) != g.n or len(coloring.edge_colors) != len(g.edges)
    ):
        raise DimensionMismatchError("coloring does not cover the graph")
    lines = ["graph corona {", "  node [shape=circle, style=filled, fillcolor=white];"]
    for v in range(g.n):
        if corona_map is not None:
            role = corona_map.role(v)
            name = f"v_{role.j}" if isinstance(role, GVertex) else f"u_{role.i}^{role.j}"
        else:
            name = str(v)
        if coloring is None:
            attrs = f'label="{name}"'
        else:
            c = coloring.vertex_colors[v]
            attrs = f'label="{name}\\n{c}", fillcolor="{PALETTE[(c - 1) % len(PALETTE)]}"'
        lines.append(f"  n{v} [{attrs}];")
    for t, (a, b) in enumerate(g.edges):
        if coloring is None:
            lines.append(f"  n{a} -- n{b};")
        else:
            c = coloring.edge_colors[t]
            lines.append(
                f'  n{a} -- n{b} [label="{c}", color="{PALETTE[(c - 1) % len(PALETTE)]}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ColoringDocument:
    """Serializable bundle of a graph and a total coloring of it."""

    n: int
    edges: tuple[tuple[int, int], ...]
    vertex_colors: tuple[int, ...]
    edge_colors: tuple[int, ...]
    max_color: int
    corona_map: CoronaMap | None = None


def coloring_document(
    g: Graph, coloring: TotalColoring, corona_map: CoronaMap | None = None
) -> ColoringDocument:
    if len(coloring.vertex_colors) != g.n or len(coloring.edge_colors) != len(g.edges):
        raise DimensionMismatchError("coloring does not cover the graph")
    return ColoringDocument(
        g.n, g.edges, coloring.vertex_colors, coloring.edge_colors, coloring.max_color, corona_map
    )


def document_graph(doc: ColoringDocument) -> Graph:
    return new_graph(doc.n, doc.edges)


def document_coloring(doc: ColoringDocument) -> TotalColoring:
    return TotalColoring(doc.vertex_colors, doc.edge_colors, doc.max_color)


def emit_coloring_json(doc: ColoringDocument) -> str:
    payload = {
        "n": doc.n,
        "edges": [list(e) for e in doc.edges],
        "vertex_colors": list(doc.vertex_colors),
        "edge_colors": list(doc.edge_colors),
        "max_color": doc.max_color,
        "corona_map": None
        if doc.corona_map is None
        else {"n_g": doc.corona_map.n_g, "n_h": doc.corona_map.n_h},
    }
    return json.dumps(payload, indent=2) + "\n"


def _as_int(payload: dict, key: str) -> int:
    x = payload[key]
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaViolationError(f"field {key!r} must be an integer")
    return x


def parse_coloring_json(text: str) -> ColoringDocument:
    """Parse and validate a coloring document; the inverse of emit_coloring_json."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaViolationError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise SchemaViolationError("top level must be an object")
    required = {"n", "edges", "vertex_colors", "edge_colors", "max_color"}
    keys = set(payload)
    if not required <= keys or not keys <= required | {"corona_map"}:
        raise SchemaViolationError(
            f"fields must be {sorted(required)} plus optional 'corona_map'"
        )
    n = _as_int(payload, "n")
    max_color = _as_int(payload, "max_color")
    if max_color < 1:
        raise SchemaViolationError("max_color must be positive")
    raw_edges = payload["edges"]
    if not isinstance(raw_edges, list) or any(
        not isinstance(e, list) or len(e) != 2 or any(not isinstance(x, int) or isinstance(x, bool) for x in e)
        for e in raw_edges
    ):
        raise SchemaViolationError("edges must be a list of [a, b] integer pairs")
    edges = tuple((e[0], e[1]) for e in raw_edges)
    try:
        new_graph(n, edges)
    except CoronaColorError as exc:
        raise SchemaViolationError(f"bad edge list: {exc}") from exc
    if list(edges) != sorted(edges) or any(a >= b for a, b in edges):
        raise SchemaViolationError("edges must be sorted pairs in canonical order")
    for key, want in (("vertex_colors", n), ("edge_colors", len(edges))):
        col = payload[key]
        if not isinstance(col, list) or any(not isinstance(c, int) or isinstance(c, bool) for c in col):
            raise SchemaViolationError(f"{key} must be a list of integers")
        if len(col) != want:
            raise SchemaViolationError(f"{key} must have length {want}")
        for c in col:
            if not 1 <= c <= max_color:
                raise ColorOutOfRangeError(f"color {c} outside 1..{max_color}")
    raw_map = payload.get("corona_map")
    corona_map = None
    if raw_map is not None:
        if not isinstance(raw_map, dict) or set(raw_map) != {"n_g", "n_h"}:
            raise SchemaViolationError("corona_map must be {'n_g': ..., 'n_h': ...}")
        n_g, n_h = _as_int(raw_map, "n_g"), _as_int(raw_map, "n_h")
        if n_g < 1 or n_h < 0 or n_g * (1 + n_h) != n:
            raise SchemaViolationError("corona_map inconsistent with the vertex count")
        corona_map = CoronaMap(n_g, n_h)
    return ColoringDocument(
        n,
        edges,
        tuple(payload["vertex_colors"]),
        tuple(payload["edge_colors"]),
        max_color,
        corona_map,
    )
