"""Lifting magic labelings from d-1 to d dimensions.

A d-dimensional grid is a stack of n_d layers, each a copy of the
(d-1)-dimensional grid, plus connecting edges between consecutive layers.
Vertex labels are lifted by adding a whole-layer offset to the base
labeling, counting layers forward on vertices with even coordinate sum and
backward on odd ones, so the two directions cancel inside every cube.
In-layer edges are lifted the same way with per-layer offsets chosen by
the parity of the edge's axis (or, for the last in-layer axis when the
target dimension is even, by the parity of the base vertex's leading
coordinates). Connecting edges get fresh labels above all in-layer ones,
derived from the base vertex labeling.

Each lift preserves the magic property, so iterating from the
two-dimensional base case yields magic labelings for every dimension;
`combine_supermagic` then merges a vertex and an edge labeling into one
total labeling whose vertex labels are exactly [1, |V|].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .errors import DimensionOrderViolation, DimensionTooSmall, SpecMismatch
from .grid_core import EdgeId, GridSpec, VertexCoord, _check_coord, _check_edge
from .labeling_2d import (
    EdgeLabeling,
    VertexLabeling,
    base_edge_labeling,
    base_vertex_labeling,
    edge_labeling_from_flat,
    vertex_labeling_from_flat,
)


class LayerCounts(NamedTuple):
    """Vertex and edge counts of a single fixed-last-coordinate layer."""

    vertices: int
    edges: int


@dataclass(frozen=True, eq=False)
class TotalLabeling:
    """Combined labeling of vertices and edges.

    For constructed instances the vertex part occupies exactly [1, |V|] and
    the edge part [|V|+1, |V|+|E|]; like the single-class labelings, the
    type itself admits arbitrary candidates.
    """

    spec: GridSpec
    vertex_grid: np.ndarray
    edge_per_axis: tuple[np.ndarray, ...]

    def __post_init__(self):
        vertices = VertexLabeling(self.spec, self.vertex_grid)
        edges = EdgeLabeling(self.spec, self.edge_per_axis)
        object.__setattr__(self, "vertex_grid", vertices.grid)
        object.__setattr__(self, "edge_per_axis", edges.per_axis)

    @property
    def vertex_flat(self) -> np.ndarray:
        return self.vertex_grid.reshape(-1)

    @property
    def edge_flat(self) -> np.ndarray:
        return np.concatenate([arr.reshape(-1) for arr in self.edge_per_axis])

    def vertex_label(self, v: VertexCoord) -> int:
        _check_coord(self.spec, v)
        return int(self.vertex_grid[tuple(c - 1 for c in v)])

    def edge_label(self, e: EdgeId) -> int:
        _check_edge(self.spec, e)
        return int(self.edge_per_axis[e.axis - 1][tuple(c - 1 for c in e.base)])


def layer_counts(spec: GridSpec) -> LayerCounts:
    """Counts for one layer of a stacked grid (spec must have dim >= 3)."""
    base = spec.prefix()
    return LayerCounts(base.vertex_count, base.edge_count)


def _coord_parity(shape: tuple[int, ...], axes: Iterable[int] | None = None) -> np.ndarray:
    """Parity of the 1-based coordinate sum over `axes` (default: all)."""
    out = np.zeros(shape, dtype=np.int64)
    for a in range(len(shape)) if axes is None else axes:
        view = [1] * len(shape)
        view[a] = shape[a]
        out = out + np.arange(1, shape[a] + 1, dtype=np.int64).reshape(view) % 2
    return out % 2


def _extended_spec(base: GridSpec, nd: int) -> GridSpec:
    nd = int(nd)
    if nd < 2:
        raise DimensionTooSmall(f"new side length must be >= 2, got {nd}")
    if nd > base.dims[-1]:
        raise DimensionOrderViolation(
            f"new side length {nd} exceeds the last canonical side {base.dims[-1]}"
        )
    return GridSpec(base.dims + (nd,))


def extend_vertex_labeling(base: VertexLabeling, nd: int) -> VertexLabeling:
    """Lift a magic vertex labeling by one dimension (nd layers)."""
    spec = _extended_spec(base.spec, nd)
    layer_size = base.spec.vertex_count
    parity = _coord_parity(base.spec.dims)
    x = np.arange(1, nd + 1, dtype=np.int64)
    offsets = np.where(parity[..., None] == 0, (x - 1) * layer_size, (nd - x) * layer_size)
    return VertexLabeling(spec, base.grid[..., None] + offsets)


def extend_edge_labeling(base_f: VertexLabeling, base_g: EdgeLabeling, nd: int) -> EdgeLabeling:
    """Lift a magic edge labeling by one dimension.

    Needs the matching vertex labeling of the layer grid: connecting-edge
    labels are built from it. In-layer labels keep the base label plus a
    multiple of the layer edge count; connecting labels sit in the block
    above nd * layer_edges.
    """
    if base_f.spec != base_g.spec:
        raise SpecMismatch(
            f"vertex labeling over {base_f.spec.dims} but edge labeling over {base_g.spec.dims}"
        )
    spec = _extended_spec(base_f.spec, nd)
    d = spec.dim
    per_layer = layer_counts(spec)

    x = np.arange(1, nd + 1, dtype=np.int64)
    forward = (x - 1) * per_layer.edges
    backward = (nd - x) * per_layer.edges

    per_axis = []
    for axis, arr in enumerate(base_g.per_axis, start=1):
        if d % 2 == 0 and axis == d - 1:
            # even target dimension: the last in-layer axis switches on the
            # parity of the base vertex's first d-2 coordinates
            parity = _coord_parity(arr.shape, axes=range(d - 2))
            offsets = np.where(parity[..., None] == 1, forward, backward)
        elif axis % 2 == 1:
            offsets = np.broadcast_to(forward, arr.shape + (nd,))
        else:
            offsets = np.broadcast_to(backward, arr.shape + (nd,))
        per_axis.append(arr[..., None] + offsets)

    # connecting edges: base coordinate x_d runs over [1, nd-1]
    t = np.arange(1, nd, dtype=np.int64)
    parity = _coord_parity(base_f.spec.dims)
    connecting = (
        base_f.grid[..., None]
        + nd * per_layer.edges
        + np.where(
            parity[..., None] == 1,
            (t - 1) * per_layer.vertices,
            (nd - 1 - t) * per_layer.vertices,
        )
    )
    per_axis.append(connecting)
    return EdgeLabeling(spec, tuple(per_axis))


def build_labelings(spec: GridSpec) -> tuple[VertexLabeling, EdgeLabeling]:
    """Magic vertex and edge labelings for any canonical spec."""
    f = base_vertex_labeling(spec.dims[0], spec.dims[1])
    g = base_edge_labeling(spec.dims[0], spec.dims[1])
    for k in range(3, spec.dim + 1):
        nd = spec.dims[k - 1]
        g = extend_edge_labeling(f, g, nd)
        f = extend_vertex_labeling(f, nd)
    return f, g


def total_labeling_from_flats(
    spec: GridSpec,
    vertex_flat: np.ndarray | list[int],
    edge_flat: np.ndarray | list[int],
) -> TotalLabeling:
    """Rebuild a total labeling from flat vertex and edge label arrays."""
    v = vertex_labeling_from_flat(spec, vertex_flat)
    e = edge_labeling_from_flat(spec, edge_flat)
    return TotalLabeling(spec, v.grid, e.per_axis)


def combine_supermagic(f: VertexLabeling, g: EdgeLabeling) -> TotalLabeling:
    """Merge vertex and edge labelings, shifting edge labels above |V|."""
    if f.spec != g.spec:
        raise SpecMismatch(
            f"vertex labeling over {f.spec.dims} but edge labeling over {g.spec.dims}"
        )
    shift = f.spec.vertex_count
    return TotalLabeling(f.spec, f.grid, tuple(arr + shift for arr in g.per_axis))
