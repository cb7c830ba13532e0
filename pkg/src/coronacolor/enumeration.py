"""Exhaustive enumeration of degree-bounded graphs up to isomorphism.

Graphs are grown one vertex at a time: every graph on t+1 vertices with
maximum degree at most 3 arises from one on t vertices by attaching a new
vertex to at most three vertices of degree below 3, so closing each level
under that augmentation and deduplicating by a canonical form enumerates
the whole family.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graph import Graph, is_connected, new_graph


def _refined_cells(g: Graph) -> list[list[int]]:
    """Iterated neighbor-color refinement; cell order is isomorphism-invariant."""
    n = g.n
    color = [g.degree(v) for v in range(n)]
    while True:
        sigs = [(color[v], tuple(sorted(color[w] for w in g.adj[v]))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[sigs[v]] for v in range(n)]
        if len(set(new)) == len(set(color)):
            cells: dict[int, list[int]] = {}
            for v in range(n):
                cells.setdefault(new[v], []).append(v)
            return [cells[c] for c in sorted(cells)]
        color = new


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Minimum adjacency-column encoding over refinement-respecting vertex orders.

    Column d holds one bit per earlier position, so the tuple fixes the graph
    up to labels; two graphs get the same form exactly when isomorphic.
    """
    n = g.n
    if n == 0:
        return (0, ())
    masks = [0] * n
    for a, b in g.edges:
        masks[a] |= 1 << b
        masks[b] |= 1 << a
    cells = _refined_cells(g)
    best: list[int] | None = None
    placed: list[int] = []
    cols = [0] * n

    def dfs(depth: int, cell_idx: int, remaining: tuple[int, ...], better: bool) -> None:
        nonlocal best
        if depth == n:
            if best is None or cols < best:
                best = cols.copy()
            return
        if not remaining:
            dfs(depth, cell_idx + 1, tuple(cells[cell_idx + 1]), better)
            return
        cand = []
        for v in remaining:
            mv = masks[v]
            col = 0
            for q, u in enumerate(placed):
                if (mv >> u) & 1:
                    col |= 1 << q
            cand.append((col, v))
        cand.sort()
        for col, v in cand:
            sub_better = better
            if not sub_better and best is not None:
                ref = best[depth]
                if col > ref:
                    break
                if col < ref:
                    sub_better = True
            cols[depth] = col
            placed.append(v)
            dfs(depth + 1, cell_idx, tuple(x for x in remaining if x != v), sub_better)
            placed.pop()

    dfs(0, 0, tuple(cells[0]), False)
    assert best is not None
    return (n, tuple(best))


def _graph_from_form(form: tuple[int, tuple[int, ...]]) -> Graph:
    n, cols = form
    edges = []
    for d in range(n):
        col = cols[d]
        q = 0
        while col:
            if col & 1:
                edges.append((q, d))
            col >>= 1
            q += 1
    return new_graph(n, edges)


def canonical_graph(g: Graph) -> Graph:
    """Canonically labeled copy of g (identical for every isomorphic input)."""
    return _graph_from_form(canonical_form(g))


@lru_cache(maxsize=None)
def _subcubic_level(n: int) -> tuple[Graph, ...]:
    if n <= 0:
        return ()
    if n == 1:
        return (new_graph(1, ()),)
    out: dict[tuple[int, tuple[int, ...]], Graph] = {}
    for parent in _subcubic_level(n - 1):
        open_verts = [v for v in range(parent.n) if parent.degree(v) < 3]
        base = list(parent.edges)
        for r in range(min(3, len(open_verts)) + 1):
            for subset in combinations(open_verts, r):
                child = new_graph(n, base + [(v, n - 1) for v in subset])
                key = canonical_form(child)
                if key not in out:
                    out[key] = _graph_from_form(key)
    return tuple(out[k] for k in sorted(out))


def enumerate_subcubic(n: int, connected: bool = False) -> tuple[Graph, ...]:
    """All graphs on n vertices with maximum degree at most 3, one per
    isomorphism class, canonically labeled and deterministically ordered."""
    level = _subcubic_level(n)
    if connected:
        return tuple(g for g in level if is_connected(g))
    return level
