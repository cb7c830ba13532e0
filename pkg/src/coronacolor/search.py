"""Exact backtracking search for neighbor-distinguishing proper total colorings.

A proper total coloring assigns colors to vertices and edges so that adjacent
or incident elements always differ.  The search additionally separates the
two ends of every edge by a signature of their closed stars: the exact
integer product of the star's colors, or the set of those colors.  Products
are plain Python integers, so distinction checks never overflow or round.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError
from .graph import Graph, connected_components, max_degree, require_subcubic, subgraph

DEFAULT_BUDGET = 5_000_000
BASE_BUDGET = 50_000_000


@dataclass(frozen=True)
class TotalColoring:
    """Colors per vertex and per canonical edge, all in 1..max_color."""

    vertex_colors: tuple[int, ...]
    edge_colors: tuple[int, ...]
    max_color: int


def npdtc_search(
    g: Graph,
    k: int,
    budget: int = DEFAULT_BUDGET,
    *,
    distinguish: str = "product",
    first_use_cap: bool = False,
) -> TotalColoring | None:
    """Proper total [k]-coloring with distinct signatures across every edge, or None.

    Elements (vertices, then edges in canonical order) are colored by
    decreasing conflict degree, colors ascending.  A star's signature is
    checked as soon as the star completes, and a branch dies early when two
    adjacent completed stars agree.  Raises BudgetExceededError when the node
    budget runs out, which is distinct from an exhaustive None.

    ``first_use_cap`` restricts every element to at most one color above the
    largest used so far.  That normalization is complete for plain colorings
    but NOT for signature distinction: relabeling colors changes products, and
    a path on three vertices with k=3 already has solutions but no normalized
    one.  It therefore defaults to off and exists only as a search heuristic;
    never combine it with interpreting None as a proof of absence.
    """
    if k < 1:
        raise ValueError("palette size must be positive")
    if distinguish not in ("product", "set"):
        raise ValueError("distinguish must be 'product' or 'set'")
    n, m = g.n, len(g.edges)
    total = n + m
    if total == 0:
        return TotalColoring((), (), 1)
    deg = [len(nb) for nb in g.adj]
    if max(deg, default=0) + 1 > k:
        return None
    for a, b in g.edges:
        # both stars would need the whole palette, forcing equal signatures
        if deg[a] + 1 == k and deg[b] + 1 == k:
            return None

    conf: list[list[int]] = [[] for _ in range(total)]
    inc: list[list[int]] = [[] for _ in range(n)]
    for t, (a, b) in enumerate(g.edges):
        e = n + t
        inc[a].append(e)
        inc[b].append(e)
        conf[e].append(a)
        conf[e].append(b)
        conf[a].append(e)
        conf[b].append(e)
    for v in range(n):
        conf[v].extend(g.adj[v])
        ie = inc[v]
        for x in range(len(ie)):
            for y in range(x + 1, len(ie)):
                conf[ie[x]].append(ie[y])
                conf[ie[y]].append(ie[x])
    owners: list[tuple[int, ...]] = [(v,) for v in range(n)]
    owners.extend(g.edges)
    # most-constrained-first order: grow by the count of conflicts against
    # already-ordered elements, so backtracking causes stay recent; ties break
    # by conflict degree, then element id.  Computed once, so completeness is
    # unaffected.
    order: list[int] = []
    score = [0] * total
    chosen = [False] * total
    for _ in range(total):
        best_e = -1
        best_key = (-1, -1, 1)
        for e in range(total):
            if chosen[e]:
                continue
            key = (score[e], len(conf[e]), -e)
            if key > best_key:
                best_key = key
                best_e = e
        chosen[best_e] = True
        order.append(best_e)
        for s in conf[best_e]:
            score[s] += 1

    color = [0] * total
    banned = [[0] * (k + 1) for _ in range(total)]
    avail = [k] * total
    star_left = [deg[v] + 1 for v in range(n)]
    product_mode = distinguish == "product"
    sig: list = [1] * n if product_mode else [set() for _ in range(n)]
    adjacency = g.adj

    def apply(e: int, c: int) -> tuple[list[int], bool]:
        dead = False
        bumped: list[int] = []
        for s in conf[e]:
            if color[s] == 0:
                bs = banned[s]
                bs[c] += 1
                bumped.append(s)
                if bs[c] == 1:
                    avail[s] -= 1
                    if avail[s] == 0:
                        dead = True
        color[e] = c
        for v in owners[e]:
            star_left[v] -= 1
            if product_mode:
                sig[v] *= c
            else:
                sig[v].add(c)
            if star_left[v] == 0:
                sv = sig[v]
                for w in adjacency[v]:
                    if star_left[w] == 0 and sig[w] == sv:
                        dead = True
                        break
        return bumped, dead

    def revert(e: int, c: int, bumped: list[int]) -> None:
        color[e] = 0
        for v in owners[e]:
            star_left[v] += 1
            if product_mode:
                sig[v] //= c
            else:
                sig[v].discard(c)
        for s in bumped:
            bs = banned[s]
            bs[c] -= 1
            if bs[c] == 0:
                avail[s] += 1

    nodes = 0
    depth = 0
    last = [0] * (total + 1)
    max_used = [0] * (total + 1)
    trail: list[list[int]] = [[] for _ in range(total)]
    while True:
        if depth == total:
            return TotalColoring(tuple(color[:n]), tuple(color[n:]), max(color))
        e = order[depth]
        cap = min(k, max_used[depth] + 1) if first_use_cap else k
        be = banned[e]
        c = last[depth] + 1
        while c <= cap and be[c]:
            c += 1
        if c > cap:
            last[depth] = 0
            depth -= 1
            if depth < 0:
                return None
            revert(order[depth], last[depth], trail[depth])
            continue
        last[depth] = c
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(f"npdtc_search exceeded {budget} nodes")
        bumped, dead = apply(e, c)
        if dead:
            revert(e, c, bumped)
            continue
        trail[depth] = bumped
        max_used[depth + 1] = c if c > max_used[depth] else max_used[depth]
        depth += 1


def chi_prod_exact(g: Graph, budget: int = DEFAULT_BUDGET, *, distinguish: str = "product") -> int:
    """Smallest k admitting a distinguishing proper total [k]-coloring.

    Works per connected component (signatures are local, so the answer is the
    maximum over components) and increments k from the forced lower bound
    max_degree+1.  Each individual search attempt gets the full budget.
    """
    if g.n == 0:
        raise ValueError("need at least one vertex")
    best = 1
    for comp in connected_components(g):
        if len(comp) == 1:
            continue
        sub, _ = subgraph(g, comp)
        k = max_degree(sub) + 1
        while True:
            if npdtc_search(sub, k, budget, distinguish=distinguish) is not None:
                break
            k += 1
        if k > best:
            best = k
    return best


def base_coloring(g: Graph, budget: int = BASE_BUDGET) -> TotalColoring:
    """Distinguishing total coloring of a subcubic graph with max_degree+3 colors.

    Existence is guaranteed for subcubic graphs, so an exhausted search is an
    internal error and both failure paths dump the instance for a bug report.
    """
    require_subcubic(g)
    k = max_degree(g) + 3
    try:
        tc = npdtc_search(g, k, budget)
    except BudgetExceededError as exc:
        raise BudgetExceededError(
            f"base coloring budget exhausted; n={g.n} edges={list(g.edges)}"
        ) from exc
    if tc is None:
        raise AssertionError(f"no (max_degree+3) coloring found; n={g.n} edges={list(g.edges)}")
    return tc
