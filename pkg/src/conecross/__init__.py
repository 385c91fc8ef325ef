"""Crossing-number workbench: cones, book drawings, and exact solvers."""

from .apex import cone_cr, insert_apex, lift_to_cone
from .books import (
    BookDrawing,
    CircleGraph,
    CyclicOrder,
    canonical_orders,
    circle_graph,
    clone_vertex_book,
    count_crossings,
    interleaves,
    one_page_drawing,
)
from .bounds import (
    BoundReport,
    PhiUpper,
    bound_report,
    conjecture_ratio,
    fs_known,
    harary_hill,
    hh_phi_upper,
    multigraph_family_point,
    multigraph_upper_check,
    thm12_check,
    thm12_min_c,
    thm41_lower,
)
from .certificates import (
    CrossingCertificate,
    SolveResult,
    SolveStats,
    certificate_from_book,
    f_graph_certificate,
    fig1_certificate,
    fig1_cone_certificate,
    planarize,
    scale_certificate,
    verify_certificate,
)
from .graphs import (
    Multigraph,
    clone_vertex,
    complete_graph,
    cone,
    cycle_graph,
    disjoint_union,
    empty_graph,
    f_graph,
    fig1_graph,
    fig3_graph,
    multiply_edges,
    random_graph,
    subdivide_edge,
)
from .maxcut import Cut, EdwardsBound, edwards_bound, maxcut_edwards, maxcut_exact
from .pages import (
    cor22_bound_ok,
    one_to_two,
    outerplanar_cr,
    split_report,
    two_page_cr,
    two_page_cr_fixed_order,
)
from .planarity import is_planar, lr_planar
from .solver import cr_certificates, cr_exact, cr_lower

__version__ = "0.1.0"

__all__ = [
    "BookDrawing",
    "BoundReport",
    "CircleGraph",
    "CrossingCertificate",
    "Cut",
    "CyclicOrder",
    "EdwardsBound",
    "Multigraph",
    "PhiUpper",
    "SolveResult",
    "SolveStats",
    "bound_report",
    "canonical_orders",
    "certificate_from_book",
    "circle_graph",
    "clone_vertex",
    "clone_vertex_book",
    "complete_graph",
    "cone",
    "cone_cr",
    "conjecture_ratio",
    "cor22_bound_ok",
    "count_crossings",
    "cr_certificates",
    "cr_exact",
    "cr_lower",
    "cycle_graph",
    "disjoint_union",
    "edwards_bound",
    "empty_graph",
    "f_graph",
    "f_graph_certificate",
    "fig1_certificate",
    "fig1_cone_certificate",
    "fig1_graph",
    "fig3_graph",
    "fs_known",
    "harary_hill",
    "hh_phi_upper",
    "insert_apex",
    "interleaves",
    "is_planar",
    "lift_to_cone",
    "lr_planar",
    "maxcut_edwards",
    "maxcut_exact",
    "multigraph_family_point",
    "multigraph_upper_check",
    "multiply_edges",
    "one_page_drawing",
    "one_to_two",
    "outerplanar_cr",
    "planarize",
    "random_graph",
    "scale_certificate",
    "split_report",
    "subdivide_edge",
    "thm12_check",
    "thm12_min_c",
    "thm41_lower",
    "two_page_cr",
    "two_page_cr_fixed_order",
    "verify_certificate",
]
