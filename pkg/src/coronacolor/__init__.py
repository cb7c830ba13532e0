"""Corona products of subcubic graphs with neighbor-product-distinguishing
total colorings: construction, exact search oracle, verifier, and interchange
formats, all behind a small CLI."""

from . import errors
from .construct import (
    CASE_1_1,
    CASE_1_2,
    CASE_2,
    FALLBACK,
    MIXED,
    ColorResult,
    ConstructionTrace,
    case1_color,
    case2_color,
    color_corona,
    dispatch_case,
    sort_by_product,
)
from .edgecolor import (
    EdgeColoring,
    chi_prime_exact,
    edge_color_product,
    edge_colors_at,
    permute_colors,
    vizing_color,
)
from .enumeration import canonical_form, canonical_graph, enumerate_subcubic
from .graph import (
    CopyEdge,
    CopyVertex,
    CoronaEdge,
    CoronaMap,
    GEdge,
    GVertex,
    Graph,
    connected_components,
    corona,
    edge_index,
    gen_random_subcubic,
    is_connected,
    is_subcubic,
    max_degree,
    new_graph,
    require_subcubic,
    subgraph,
)
from .graphio import (
    ColoringDocument,
    coloring_document,
    document_coloring,
    document_graph,
    emit_coloring_json,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    parse_coloring_json,
    parse_edge_list,
    parse_graph6,
)
from .search import (
    BASE_BUDGET,
    DEFAULT_BUDGET,
    TotalColoring,
    base_coloring,
    chi_prod_exact,
    npdtc_search,
)
from .verify import (
    VerifyReport,
    Violation,
    product_at,
    report_to_json,
    verify_npd,
    verify_nvd,
    verify_proper_total,
)

__version__ = "0.1.0"
