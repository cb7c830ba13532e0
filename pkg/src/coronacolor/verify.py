"""Independent checker for proper total colorings and neighbor distinction.

All products are exact Python integers and reports are exhaustive: every
clash and every collision is listed, not just the first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DimensionMismatchError, IncompleteColoringError
from .graph import Graph
from .search import TotalColoring

VERTEX_VERTEX_CLASH = "VertexVertexClash"
EDGE_EDGE_CLASH = "EdgeEdgeClash"
VERTEX_EDGE_CLASH = "VertexEdgeClash"
PRODUCT_COLLISION = "ProductCollision"
SET_COLLISION = "SetCollision"
COLOR_OUT_OF_RANGE = "ColorOutOfRange"


@dataclass(frozen=True)
class Violation:
    kind: str
    elements: tuple
    witness: tuple


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    violations: tuple[Violation, ...]
    products: dict[int, int]


def _check_cover(g: Graph, coloring: TotalColoring) -> None:
    if len(coloring.vertex_colors) != g.n or len(coloring.edge_colors) != len(g.edges):
        raise DimensionMismatchError(
            f"coloring covers {len(coloring.vertex_colors)} vertices / "
            f"{len(coloring.edge_colors)} edges, graph has {g.n} / {len(g.edges)}"
        )


def _incidence(g: Graph) -> list[list[int]]:
    inc: list[list[int]] = [[] for _ in range(g.n)]
    for t, (a, b) in enumerate(g.edges):
        inc[a].append(t)
        inc[b].append(t)
    return inc


def _products(g: Graph, coloring: TotalColoring, inc: list[list[int]]) -> dict[int, int]:
    ecol = coloring.edge_colors
    out: dict[int, int] = {}
    for v in range(g.n):
        p = coloring.vertex_colors[v]
        for t in inc[v]:
            p *= ecol[t]
        out[v] = p
    return out


def product_at(g: Graph, coloring: TotalColoring, v: int) -> int:
    """Exact product of v's color and the colors of its incident edges."""
    _check_cover(g, coloring)
    p = coloring.vertex_colors[v]
    star = [p]
    for t, (a, b) in enumerate(g.edges):
        if a == v or b == v:
            star.append(coloring.edge_colors[t])
    if any(c is None or c < 1 for c in star):
        raise IncompleteColoringError(f"star of vertex {v} is not fully colored")
    out = 1
    for c in star:
        out *= c
    return out


def verify_proper_total(g: Graph, coloring: TotalColoring) -> VerifyReport:
    """Report every adjacency/incidence clash and every color outside 1..max_color."""
    _check_cover(g, coloring)
    vcol, ecol, mx = coloring.vertex_colors, coloring.edge_colors, coloring.max_color
    violations: list[Violation] = []
    for v, c in enumerate(vcol):
        if not 1 <= c <= mx:
            violations.append(Violation(COLOR_OUT_OF_RANGE, (("vertex", v),), (c,)))
    for t, c in enumerate(ecol):
        if not 1 <= c <= mx:
            violations.append(Violation(COLOR_OUT_OF_RANGE, (("edge", g.edges[t]),), (c,)))
    for a, b in g.edges:
        if vcol[a] == vcol[b]:
            violations.append(
                Violation(VERTEX_VERTEX_CLASH, (("vertex", a), ("vertex", b)), (vcol[a],))
            )
    for t, (a, b) in enumerate(g.edges):
        c = ecol[t]
        for v in (a, b):
            if c == vcol[v]:
                violations.append(
                    Violation(VERTEX_EDGE_CLASH, (("vertex", v), ("edge", (a, b))), (c,))
                )
    inc = _incidence(g)
    for v in range(g.n):
        groups: dict[int, list[int]] = {}
        for t in inc[v]:
            groups.setdefault(ecol[t], []).append(t)
        for c, ts in groups.items():
            for x in range(len(ts)):
                for y in range(x + 1, len(ts)):
                    violations.append(
                        Violation(
                            EDGE_EDGE_CLASH,
                            (("edge", g.edges[ts[x]]), ("edge", g.edges[ts[y]])),
                            (c,),
                        )
                    )
    products = _products(g, coloring, inc) if all(c >= 1 for c in vcol + ecol) else {}
    return VerifyReport(not violations, tuple(violations), products)


def verify_npd(g: Graph, coloring: TotalColoring) -> VerifyReport:
    """Proper-total checks plus distinct closed-star products across every edge."""
    report = verify_proper_total(g, coloring)
    if not report.ok:
        return report
    prods = report.products
    violations = [
        Violation(PRODUCT_COLLISION, (("vertex", a), ("vertex", b)), (prods[a], prods[b]))
        for a, b in g.edges
        if prods[a] == prods[b]
    ]
    return VerifyReport(not violations, tuple(violations), prods)


def verify_nvd(g: Graph, coloring: TotalColoring) -> VerifyReport:
    """Proper-total checks plus distinct closed-star color sets across every edge."""
    report = verify_proper_total(g, coloring)
    if not report.ok:
        return report
    inc = _incidence(g)
    sets = [
        frozenset((coloring.vertex_colors[v], *(coloring.edge_colors[t] for t in inc[v])))
        for v in range(g.n)
    ]
    violations = [
        Violation(
            SET_COLLISION,
            (("vertex", a), ("vertex", b)),
            (tuple(sorted(sets[a])), tuple(sorted(sets[b]))),
        )
        for a, b in g.edges
        if sets[a] == sets[b]
    ]
    return VerifyReport(not violations, tuple(violations), report.products)


def report_to_json(report: VerifyReport) -> str:
    """Render a report as the JSON sibling of the coloring document."""

    def element(el: tuple) -> list:
        kind, payload = el
        return [kind, list(payload) if isinstance(payload, tuple) else payload]

    payload = {
        "ok": report.ok,
        "violations": [
            {
                "kind": v.kind,
                "elements": [element(el) for el in v.elements],
                "witness": [list(w) if isinstance(w, tuple) else w for w in v.witness],
            }
            for v in report.violations
        ],
        "products": {str(v): p for v, p in sorted(report.products.items())},
    }
    return json.dumps(payload, indent=2)
