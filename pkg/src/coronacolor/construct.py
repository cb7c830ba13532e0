"""Structured total coloring of corona products within max_degree+3 colors.

The corona of two subcubic graphs is colored from two ingredients: a
distinguishing total coloring of the first factor and a bounded proper edge
coloring of the second.  Copy vertices are laid out along the second
factor's vertices sorted by edge-color product, which makes the products
inside each copy strictly increasing.  Components outside the structured
cases, and any component whose structured coloring fails verification, are
recolored by exact search within the same palette bound, so every returned
coloring is verified.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .edgecolor import EdgeColoring, edge_color_product, edge_colors_at, permute_colors, vizing_color
from .errors import BudgetExceededError, FallbackBudgetError, NoAvoidColorError
from .graph import (
    CoronaMap,
    Graph,
    connected_components,
    corona,
    edge_index,
    max_degree,
    require_subcubic,
    subgraph,
)
from .search import TotalColoring, base_coloring, npdtc_search
from .verify import verify_npd

CASE_1_1 = "Case1_1"
CASE_1_2 = "Case1_2"
CASE_2 = "Case2"
FALLBACK = "Fallback"
MIXED = "Mixed"

FALLBACK_BUDGET = 30_000_000


@dataclass(frozen=True)
class ConstructionTrace:
    """How a corona coloring was assembled.

    case_tag summarizes the whole run (Mixed when components differ);
    component_cases pins the tag per component of the first factor.  sigma
    lists the second factor's vertices by nondecreasing edge-color product,
    ties broken by vertex index.  beta is the recoloring color of the
    single-edge case, alphas the per-copy avoidance colors of the general
    case, and normalized records whether edge-color classes were permuted.
    """

    case_tag: str
    sigma: tuple[int, ...]
    component_cases: tuple[tuple[tuple[int, ...], str], ...]
    beta: int | None
    alphas: tuple[tuple[int, int], ...]
    palette_bound: int
    normalized: bool


class ColorResult(NamedTuple):
    graph: Graph
    corona_map: CoronaMap
    coloring: TotalColoring
    trace: ConstructionTrace


def sort_by_product(ecol: EdgeColoring, h: Graph) -> tuple[int, ...]:
    """h's vertices by nondecreasing incident edge-color product, ties by index."""
    return tuple(sorted(range(h.n), key=lambda u: (edge_color_product(h, ecol, u), u)))


def dispatch_case(g: Graph) -> str:
    """Coarse dispatch: "case1" when every component is a single edge, "case2"
    for maximum degree 2 or 3, "fallback" otherwise."""
    require_subcubic(g)
    d = max_degree(g)
    if d >= 2:
        return "case2"
    if d == 1 and all(len(c) == 2 for c in connected_components(g)):
        return "case1"
    return "fallback"


def _key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def case1_color(
    v1: int,
    v2: int,
    h: Graph,
    ecol: EdgeColoring,
    sigma: tuple[int, ...],
    cmap: CoronaMap,
) -> tuple[dict[int, int], dict[tuple[int, int], int], str, int | None]:
    """Colors for one single-edge component of G and its two copies of H.

    When color 4 misses the minimum-product vertex, the base coloring of the
    component is kept and copy position i gets vertex color i+3 under corona
    edge color i+4.  Otherwise the component edge and both minimum copy
    vertices are recolored to the smallest color of {1,2,3} missing there,
    their corona edges get 5, the endpoints take the two remaining small
    colors, and positions from 2 on follow the same ladder.
    """
    u_min = sigma[0]
    s_min = edge_colors_at(h, ecol, u_min)
    va: dict[int, int] = {}
    ea: dict[tuple[int, int], int] = {}
    if 4 not in s_min:
        tag, beta, start = CASE_1_2, None, 1
    else:
        free = sorted({1, 2, 3} - s_min)
        if not free:
            raise NoAvoidColorError("no color of {1,2,3} misses the minimum-product vertex")
        beta = free[0]
        rest = sorted({1, 2, 3} - {beta})
        va[v1], va[v2] = rest[0], rest[1]
        ea[(v1, v2)] = beta
        for vj, j in ((v1, v1 + 1), (v2, v2 + 1)):
            cu = cmap.copy_vertex(j, u_min + 1)
            va[cu] = beta
            ea[_key(vj, cu)] = 5
        tag, start = CASE_1_1, 2
    for pos in range(start, len(sigma) + 1):
        hu = sigma[pos - 1]
        for vj, j in ((v1, v1 + 1), (v2, v2 + 1)):
            cu = cmap.copy_vertex(j, hu + 1)
            va[cu] = pos + 3
            ea[_key(vj, cu)] = pos + 4
    return va, ea, tag, beta


def case2_color(
    comp: tuple[int, ...],
    base: TotalColoring,
    h: Graph,
    ecol: EdgeColoring,
    sigma: tuple[int, ...],
    cmap: CoronaMap,
    delta_g: int,
) -> tuple[dict[int, int], dict[tuple[int, int], int], dict[int, int]]:
    """Ladder coloring of one component's copies when max_degree(G) is 2 or 3.

    Every copy j starts with an avoidance color alpha_j, the smallest color
    of 1..5 missing from both the minimum copy vertex's edge colors and
    v_j's own color; later positions climb above the base palette.
    """
    u_min = sigma[0]
    s_min = edge_colors_at(h, ecol, u_min)
    va: dict[int, int] = {}
    ea: dict[tuple[int, int], int] = {}
    alphas: dict[int, int] = {}
    for v in comp:
        j = v + 1
        forbidden = set(s_min)
        forbidden.add(base.vertex_colors[v])
        alpha = None
        for c in (1, 2, 3, 4, 5):
            if c not in forbidden:
                alpha = c
                break
        if alpha is None:
            raise NoAvoidColorError("all of 1..5 forbidden; impossible for degree <= 3")
        alphas[j] = alpha
        cu = cmap.copy_vertex(j, u_min + 1)
        va[cu] = alpha
        ea[_key(v, cu)] = delta_g + 4
        for pos in range(2, len(sigma) + 1):
            hu = sigma[pos - 1]
            cu = cmap.copy_vertex(j, hu + 1)
            va[cu] = delta_g + pos + 2
            ea[_key(v, cu)] = delta_g + pos + 3
    return va, ea, alphas


def _steer_color4_off_min_vertex(h: Graph, ecol: EdgeColoring) -> tuple[EdgeColoring, bool]:
    """Swap color classes so the minimum-product vertex misses color 4.

    Each swap trades 4 for a smaller missing color at the current minimum
    vertex; the minimum is recomputed afterwards, and the loop stops on
    success or on a repeated state.
    """
    applied = False
    seen: set[tuple] = set()
    cur = ecol
    while True:
        sigma = sort_by_product(cur, h)
        s_min = edge_colors_at(h, cur, sigma[0])
        if 4 not in s_min:
            return cur, applied
        state = tuple(sorted(cur.colors.items()))
        if state in seen:
            return cur, applied
        seen.add(state)
        gamma = min({1, 2, 3} - s_min)
        perm = {c: c for c in range(1, cur.k + 1)}
        perm[4], perm[gamma] = gamma, 4
        cur = permute_colors(cur, perm)
        applied = True


def _corona_component(cg: Graph, cmap: CoronaMap, comp: tuple[int, ...]) -> tuple[Graph, tuple[int, ...]]:
    verts = list(comp)
    for v in comp:
        j = v + 1
        for i in range(1, cmap.n_h + 1):
            verts.append(cmap.copy_vertex(j, i))
    return subgraph(cg, verts)


def _slice_coloring(
    sub: Graph,
    verts: tuple[int, ...],
    vcol: list[int],
    earr: list[int],
    eidx: dict[tuple[int, int], int],
) -> TotalColoring:
    sv = tuple(vcol[v] for v in verts)
    se = tuple(earr[eidx[_key(verts[a], verts[b])]] for a, b in sub.edges)
    return TotalColoring(sv, se, max((*sv, *se)))


def _fallback_component(
    cg: Graph,
    cmap: CoronaMap,
    comp: tuple[int, ...],
    vcol: list[int],
    earr: list[int],
    eidx: dict[tuple[int, int], int],
    bound: int,
    budget: int,
) -> None:
    sub, verts = _corona_component(cg, cmap, comp)
    try:
        tc = npdtc_search(sub, bound, budget)
    except BudgetExceededError as exc:
        raise FallbackBudgetError(f"fallback search exhausted on component {comp}") from exc
    if tc is None:
        raise AssertionError(
            f"internal: no coloring with {bound} colors for component {comp}"
        )
    for i, v in enumerate(verts):
        vcol[v] = tc.vertex_colors[i]
    for t, (a, b) in enumerate(sub.edges):
        earr[eidx[_key(verts[a], verts[b])]] = tc.edge_colors[t]


def color_corona(
    g: Graph,
    h: Graph,
    *,
    normalize: bool = True,
    fallback_budget: int = FALLBACK_BUDGET,
) -> ColorResult:
    """Build g∘h and a verified distinguishing total coloring within
    max_degree(g∘h)+3 colors.

    Single-edge components of g follow the recolor-or-ladder case, components
    under maximum degree 2..3 the avoidance-ladder case (offset by the global
    maximum degree so all components share one palette bound); isolated
    vertices, an empty h, and any component failing verification fall back to
    exact search.  The full verifier runs before returning.
    """
    require_subcubic(g)
    require_subcubic(h)
    cg, cmap = corona(g, h)
    bound = max_degree(cg) + 3
    eidx = edge_index(cg)
    vcol = [0] * cg.n
    earr = [0] * len(cg.edges)
    comps = connected_components(g)
    tags = [FALLBACK] * len(comps)
    beta: int | None = None
    alphas: dict[int, int] = {}
    normalized = False
    sigma: tuple[int, ...] = ()
    fallback: list[int] = []
    if h.n == 0:
        fallback = list(range(len(comps)))
    else:
        base = base_coloring(g)
        ecol = vizing_color(h)
        dg = max_degree(g)
        if dg == 1 and normalize:
            ecol, normalized = _steer_color4_off_min_vertex(h, ecol)
        sigma = sort_by_product(ecol, h)
        for v in range(g.n):
            vcol[v] = base.vertex_colors[v]
        for t, e in enumerate(g.edges):
            earr[eidx[e]] = base.edge_colors[t]
        for j in range(1, g.n + 1):
            for a, b in h.edges:
                ca = cmap.copy_vertex(j, a + 1)
                cb = cmap.copy_vertex(j, b + 1)
                earr[eidx[_key(ca, cb)]] = ecol.colors[(a, b)]
        for ci, comp in enumerate(comps):
            if len(comp) == 1:
                fallback.append(ci)
                continue
            if dg == 1:
                va, ea, tag, beta = case1_color(comp[0], comp[1], h, ecol, sigma, cmap)
            else:
                va, ea, comp_alphas = case2_color(comp, base, h, ecol, sigma, cmap, dg)
                alphas.update(comp_alphas)
                tag = CASE_2
            for x, c in va.items():
                vcol[x] = c
            for e, c in ea.items():
                earr[eidx[e]] = c
            tags[ci] = tag
        for ci, comp in enumerate(comps):
            if tags[ci] == FALLBACK:
                continue
            sub, verts = _corona_component(cg, cmap, comp)
            if not verify_npd(sub, _slice_coloring(sub, verts, vcol, earr, eidx)).ok:
                tags[ci] = FALLBACK
                fallback.append(ci)
    for ci in fallback:
        _fallback_component(cg, cmap, comps[ci], vcol, earr, eidx, bound, fallback_budget)
    coloring = TotalColoring(tuple(vcol), tuple(earr), max(max(vcol), max(earr, default=0)))
    report = verify_npd(cg, coloring)
    if not report.ok:
        raise AssertionError(
            f"internal: constructed coloring failed verification: {report.violations[:3]}"
        )
    if coloring.max_color > bound:
        raise AssertionError(f"internal: {coloring.max_color} colors exceed bound {bound}")
    unique = set(tags)
    trace = ConstructionTrace(
        case_tag=tags[0] if len(unique) == 1 else MIXED,
        sigma=sigma,
        component_cases=tuple((comp, tags[ci]) for ci, comp in enumerate(comps)),
        beta=beta,
        alphas=tuple(sorted(alphas.items())),
        palette_bound=bound,
        normalized=normalized,
    )
    return ColorResult(cg, cmap, coloring, trace)
