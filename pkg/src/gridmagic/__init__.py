"""Cube-magic and cube-supermagic labelings of d-dimensional grid graphs.

Construction (closed-form base case plus dimension lifting), exhaustive
verification over all unit-cube subgraphs, closed-form magic sums,
brute-force oracles for tiny grids, and a CLI with serialization and
figure export.
"""

from .errors import (
    BudgetExceeded,
    CoordOutOfRange,
    DimensionOrderViolation,
    DimensionTooSmall,
    GridMagicError,
    Overflow,
    ParseError,
    SpecMismatch,
    UnsupportedDimension,
    UsageError,
    VersionMismatch,
)
from .grid_core import (
    CubeId,
    EdgeId,
    GridSpec,
    VertexCoord,
    canonicalize,
    check_h_covering,
    cube_edges,
    cube_vertices,
    edge_endpoints,
    edge_rank,
    enumerate_cubes,
    enumerate_edges,
    enumerate_vertices,
    vertex_rank,
    vertex_unrank,
)
from .labeling_2d import (
    EdgeLabeling,
    VertexLabeling,
    base_edge_labeling,
    base_vertex_labeling,
    edge_labeling_from_flat,
    vertex_labeling_from_flat,
)
from .labeling_nd import (
    LayerCounts,
    TotalLabeling,
    build_labelings,
    combine_supermagic,
    extend_edge_labeling,
    extend_vertex_labeling,
    layer_counts,
    total_labeling_from_flats,
)
from .verifier import (
    MagicReport,
    PredictedSums,
    closed_form_sums,
    verify_edge_magic,
    verify_supermagic,
    verify_vertex_magic,
)
from .oracle import (
    SearchBudget,
    SearchResult,
    confirm_construction,
    exhaustive_search,
    labeling_digest,
    required_assignments,
)
from .io_cli import (
    LabelingDocument,
    cli,
    document_edge_label,
    document_vertex_label,
    generate_document,
    load,
    render,
    save,
    verify_document,
)

__all__ = [
    "BudgetExceeded",
    "CoordOutOfRange",
    "CubeId",
    "DimensionOrderViolation",
    "DimensionTooSmall",
    "EdgeId",
    "EdgeLabeling",
    "GridMagicError",
    "GridSpec",
    "LabelingDocument",
    "LayerCounts",
    "MagicReport",
    "Overflow",
    "ParseError",
    "PredictedSums",
    "SearchBudget",
    "SearchResult",
    "SpecMismatch",
    "TotalLabeling",
    "UnsupportedDimension",
    "UsageError",
    "VersionMismatch",
    "VertexCoord",
    "VertexLabeling",
    "base_edge_labeling",
    "base_vertex_labeling",
    "build_labelings",
    "canonicalize",
    "check_h_covering",
    "cli",
    "closed_form_sums",
    "combine_supermagic",
    "confirm_construction",
    "cube_edges",
    "cube_vertices",
    "document_edge_label",
    "document_vertex_label",
    "edge_endpoints",
    "edge_labeling_from_flat",
    "edge_rank",
    "enumerate_cubes",
    "enumerate_edges",
    "enumerate_vertices",
    "exhaustive_search",
    "extend_edge_labeling",
    "extend_vertex_labeling",
    "generate_document",
    "labeling_digest",
    "layer_counts",
    "load",
    "render",
    "required_assignments",
    "save",
    "total_labeling_from_flats",
    "verify_document",
    "verify_edge_magic",
    "verify_supermagic",
    "verify_vertex_magic",
    "vertex_labeling_from_flat",
    "vertex_rank",
    "vertex_unrank",
]
