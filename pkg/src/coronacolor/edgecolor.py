"""Proper edge colorings: constructive bounded palette and an exact minimum oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import BudgetExceededError, NotABijectionError
from .graph import Graph, max_degree


@dataclass(frozen=True)
class EdgeColoring:
    """Map from canonical edge to a color in 1..k."""

    colors: dict[tuple[int, int], int]
    k: int


def edge_colors_at(h: Graph, ecol: EdgeColoring, u: int) -> frozenset[int]:
    """Set of colors on the edges incident with u."""
    return frozenset(ecol.colors[(min(u, w), max(u, w))] for w in h.adj[u])


def edge_color_product(h: Graph, ecol: EdgeColoring, u: int) -> int:
    """Product of the colors on the edges incident with u; 1 when u is isolated."""
    p = 1
    for w in h.adj[u]:
        p *= ecol.colors[(min(u, w), max(u, w))]
    return p


def _key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def vizing_color(h: Graph) -> EdgeColoring:
    """Proper edge coloring with the fixed palette 1..max_degree(h)+1.

    Edges are inserted in canonical order.  When no color is free at both
    endpoints, a maximal fan is built at the first endpoint and recolored,
    inverting one two-colored alternating path if needed.  Ties always break
    to the lowest color and the smallest vertex, so the output is a
    deterministic function of the graph.
    """
    if not h.edges:
        return EdgeColoring({}, 1)
    k = max_degree(h) + 1
    color: dict[tuple[int, int], int] = {}
    at: list[dict[int, int]] = [dict() for _ in range(h.n)]  # vertex -> color -> neighbor

    def free(v: int) -> int:
        for c in range(1, k + 1):
            if c not in at[v]:
                return c
        raise AssertionError("degree exceeds palette")

    def assign(a: int, b: int, c: int) -> None:
        e = _key(a, b)
        old = color.get(e)
        if old is not None:
            del at[a][old]
            del at[b][old]
        color[e] = c
        at[a][c] = b
        at[b][c] = a

    def unassign(a: int, b: int) -> None:
        old = color.pop(_key(a, b))
        del at[a][old]
        del at[b][old]

    def invert_path(u: int, c: int, d: int) -> None:
        # walk the maximal path from u alternating d, c, then swap the two colors
        path: list[tuple[int, int, int]] = []  # (x, y, col)
        x, want = u, d
        while want in at[x]:
            y = at[x][want]
            path.append((x, y, want))
            x, want = y, (c if want == d else d)
        for a, b, col in path:
            del at[a][col]
            del at[b][col]
        for a, b, col in path:
            new = c if col == d else d
            color[_key(a, b)] = new
            at[a][new] = b
            at[b][new] = a

    for u, v in h.edges:
        fan = [v]
        in_fan = {v}
        while True:
            last = fan[-1]
            nxt = None
            for w in h.adj[u]:
                if w in in_fan:
                    continue
                cw = color.get(_key(u, w))
                if cw is not None and cw not in at[last]:
                    nxt = w
                    break
            if nxt is None:
                break
            fan.append(nxt)
            in_fan.add(nxt)
        c = free(u)
        d = free(fan[-1])
        if c != d and d in at[u]:
            invert_path(u, c, d)
        # shortest fan prefix that stays a fan and ends where d is free
        w_idx = None
        for i, x in enumerate(fan):
            if d in at[x]:
                continue
            if all(color[_key(u, fan[j])] not in at[fan[j - 1]] for j in range(1, i + 1)):
                w_idx = i
                break
        if w_idx is None:
            raise AssertionError("fan recoloring failed")
        for j in range(1, w_idx + 1):
            cj = color[_key(u, fan[j])]
            unassign(u, fan[j])
            assign(u, fan[j - 1], cj)
        assign(u, fan[w_idx], d)
    return EdgeColoring(color, k)


def chi_prime_exact(h: Graph, budget: int = 2_000_000) -> tuple[int, EdgeColoring]:
    """Minimum number of colors in a proper edge coloring, with a witness.

    Backtracking over edges in canonical order; the t-th edge may only use
    colors 1..min(t, k), which loses no solutions because any coloring can be
    relabeled by order of first use.  The budget counts attempted assignments.
    """
    m = len(h.edges)
    if m == 0:
        return 1, EdgeColoring({}, 1)
    adj_edges: list[list[int]] = [[] for _ in range(m)]
    inc: list[list[int]] = [[] for _ in range(h.n)]
    for t, (a, b) in enumerate(h.edges):
        for s in inc[a] + inc[b]:
            adj_edges[t].append(s)
            adj_edges[s].append(t)
        inc[a].append(t)
        inc[b].append(t)
    nodes = 0
    delta = max_degree(h)
    for kk in range(delta, delta + 2):
        assign = [0] * m
        t = 0
        while t >= 0:
            if t == m:
                witness = {h.edges[i]: assign[i] for i in range(m)}
                return kk, EdgeColoring(witness, kk)
            limit = min(t + 1, kk)
            c = assign[t] + 1
            placed = False
            while c <= limit:
                nodes += 1
                if nodes > budget:
                    raise BudgetExceededError(f"chi_prime_exact exceeded {budget} nodes")
                if all(assign[s] != c for s in adj_edges[t]):
                    placed = True
                    break
                c += 1
            if placed:
                assign[t] = c
                t += 1
            else:
                assign[t] = 0
                t -= 1
    raise AssertionError("unreachable: max_degree+1 colors always suffice")


def permute_colors(ecol: EdgeColoring, perm: Mapping[int, int]) -> EdgeColoring:
    """Relabel color classes by a bijection on 1..k; properness is preserved."""
    domain = set(range(1, ecol.k + 1))
    if set(perm.keys()) != domain or set(perm.values()) != domain:
        raise NotABijectionError(f"permutation must be a bijection on 1..{ecol.k}")
    return EdgeColoring({e: perm[c] for e, c in ecol.colors.items()}, ecol.k)
