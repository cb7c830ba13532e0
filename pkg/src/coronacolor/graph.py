"""Simple undirected graphs, corona products and degree-bounded generation.

Vertices are dense integers 0..n-1.  Edges are unordered pairs stored as
sorted tuples in lexicographic order, which fixes the canonical edge order
used throughout the package.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import (
    DuplicateEdgeError,
    EndpointOutOfRangeError,
    NotSubcubicError,
    SelfLoopError,
)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])


def new_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Validate and build a graph from an unordered pair list."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n):
            raise EndpointOutOfRangeError(f"edge ({a},{b}) has an endpoint outside 0..{n - 1}")
        if a == b:
            raise SelfLoopError(f"self-loop at vertex {a}")
        e = (a, b) if a < b else (b, a)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        seen.add(e)
        adj[a].append(b)
        adj[b].append(a)
    return Graph(n, tuple(tuple(sorted(nb)) for nb in adj), tuple(sorted(seen)))


def max_degree(g: Graph) -> int:
    return max((len(nb) for nb in g.adj), default=0)


def is_subcubic(g: Graph) -> bool:
    return max_degree(g) <= 3


def require_subcubic(g: Graph) -> None:
    d = max_degree(g)
    if d > 3:
        raise NotSubcubicError(f"maximum degree {d} exceeds 3")


def edge_index(g: Graph) -> dict[tuple[int, int], int]:
    """Canonical edge -> position in g.edges."""
    return {e: t for t, e in enumerate(g.edges)}


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    comps: list[tuple[int, ...]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph plus the sorted original vertices (new id = position)."""
    verts = tuple(sorted(set(vertices)))
    back = {v: i for i, v in enumerate(verts)}
    edges = [(back[a], back[b]) for a, b in g.edges if a in back and b in back]
    return new_graph(len(verts), edges), verts


class GVertex(NamedTuple):
    j: int


class CopyVertex(NamedTuple):
    j: int
    i: int


class GEdge(NamedTuple):
    pass


class CopyEdge(NamedTuple):
    j: int


class CoronaEdge(NamedTuple):
    j: int
    i: int


@dataclass(frozen=True)
class CoronaMap:
    """Role bookkeeping for corona vertices, using 1-based labels v_j and u_i^j.

    Vertex x < n_g is v_{x+1}; copies follow grouped by j, so u_i^j sits at
    n_g + (j-1)*n_h + (i-1).
    """

    n_g: int
    n_h: int

    @property
    def n(self) -> int:
        return self.n_g * (1 + self.n_h)

    def g_vertex(self, j: int) -> int:
        if not 1 <= j <= self.n_g:
            raise ValueError(f"j={j} outside 1..{self.n_g}")
        return j - 1

    def copy_vertex(self, j: int, i: int) -> int:
        if not (1 <= j <= self.n_g and 1 <= i <= self.n_h):
            raise ValueError(f"(j,i)=({j},{i}) outside the copy grid")
        return self.n_g + (j - 1) * self.n_h + (i - 1)

    def role(self, x: int) -> GVertex | CopyVertex:
        if not 0 <= x < self.n:
            raise ValueError(f"vertex {x} outside 0..{self.n - 1}")
        if x < self.n_g:
            return GVertex(x + 1)
        r = x - self.n_g
        return CopyVertex(r // self.n_h + 1, r % self.n_h + 1)

    def edge_class(self, a: int, b: int) -> GEdge | CopyEdge | CoronaEdge:
        ra, rb = self.role(a), self.role(b)
        if isinstance(ra, GVertex) and isinstance(rb, GVertex):
            return GEdge()
        if isinstance(ra, CopyVertex) and isinstance(rb, CopyVertex):
            if ra.j != rb.j:
                raise ValueError(f"({a},{b}) joins different copies; not an edge of the corona")
            return CopyEdge(ra.j)
        gr, cr = (ra, rb) if isinstance(ra, GVertex) else (rb, ra)
        if gr.j != cr.j:
            raise ValueError(f"({a},{b}) joins v_{gr.j} to copy {cr.j}; not an edge of the corona")
        return CoronaEdge(cr.j, cr.i)


def corona(g: Graph, h: Graph) -> tuple[Graph, CoronaMap]:
    """Corona product: one copy of g plus g.n copies of h, v_j joined to all of copy j.

    With an empty second factor the product is g itself.
    """
    if g.n < 1:
        raise ValueError("corona needs at least one vertex in the first factor")
    cmap = CoronaMap(g.n, h.n)
    if h.n == 0:
        return g, cmap
    edges = list(g.edges)
    for j in range(1, g.n + 1):
        base = g.n + (j - 1) * h.n
        for a, b in h.edges:
            edges.append((base + a, base + b))
        vj = j - 1
        for i in range(h.n):
            edges.append((vj, base + i))
    return new_graph(cmap.n, edges), cmap


def gen_random_subcubic(n: int, seed: int) -> Graph:
    """Deterministic random graph with maximum degree at most 3.

    Uniform random pair proposals, accepted while both endpoints have degree
    below 3 and the edge is new; the proposal budget is fixed at 12*n.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    deg = [0] * n
    present: set[tuple[int, int]] = set()
    for _ in range(12 * n):
        a = rng.randrange(n)
        b = rng.randrange(n)
        if a == b or deg[a] >= 3 or deg[b] >= 3:
            continue
        e = (a, b) if a < b else (b, a)
        if e in present:
            continue
        present.add(e)
        deg[a] += 1
        deg[b] += 1
    return new_graph(n, sorted(present))
