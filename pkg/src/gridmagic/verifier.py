"""Exhaustive checking of candidate labelings against the magic conditions.

A labeling is magic when every unit cube carries the same label sum, and a
total labeling is supermagic when additionally its vertex labels are
exactly [1, |V|]. The check enumerates nothing fancier than axis-aligned
unit cubes: only those subgraphs are cubes, so a full sweep over the
prod(n_i - 1) corners is complete. Sums are computed as 2^d (vertices)
resp. d * 2^(d-1) (edges) shifted-slice additions over the dense label
arrays, which keeps million-element grids in fractions of a second.

`closed_form_sums` computes the magic sums the constructions are expected
to attain, by pure arithmetic over the same layer recursion the builders
use; the verifier reports observed against predicted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import Overflow, SpecMismatch
from .grid_core import GridSpec
from .labeling_2d import EdgeLabeling, VertexLabeling
from .labeling_nd import TotalLabeling

INT64_MAX = 2**63 - 1

# Failure diagnostics keep at most this many distinct cube sums.
MAX_REPORTED_SUMS = 32


@dataclass(frozen=True)
class MagicReport:
    """Outcome of verifying one candidate labeling."""

    kind: str  # "vertex" | "edge" | "total"
    bijective: bool
    cube_sum_values: tuple[int, ...]  # sorted distinct sums, capped
    distinct_count: int
    magic: bool
    magic_sum: int | None
    predicted_sum: int | None
    matches_prediction: bool | None


@dataclass(frozen=True)
class PredictedSums:
    """Magic sums the constructed labelings attain, from closed forms."""

    c_vertex: int
    c_edge: int
    c_total: int


def closed_form_sums(spec: GridSpec) -> PredictedSums:
    """Predicted vertex, edge and total magic sums for a canonical spec."""
    n1, n2 = spec.dims[:2]
    bump = 1 if n1 % 2 == 0 and n2 % 2 == 1 else 0
    c_vertex = 2 * (n1 * n2 + 1 + bump)
    c_edge = (2 * n1 - 1) * (2 * n2 - 1) + 1
    for k in range(3, spec.dim + 1):
        nd = spec.dims[k - 1]
        layer = GridSpec(spec.dims[: k - 1])
        n_layer, m_layer = layer.vertex_count, layer.edge_count
        c_vertex, c_edge = (
            2 * c_vertex + 2 ** (k - 1) * (nd - 1) * n_layer,
            c_vertex
            + 2 * c_edge
            + 2 ** (k - 2) * (nd - 2) * n_layer
            + 2 ** (k - 2) * (2 * nd + (k - 1) * (nd - 1)) * m_layer,
        )
        if c_vertex > INT64_MAX or c_edge > INT64_MAX:
            raise Overflow(f"magic sums of {spec.dims} exceed 64-bit range")
    c_total = c_vertex + c_edge + spec.cube_edge_count * spec.vertex_count
    if c_total > INT64_MAX:
        raise Overflow(f"total magic sum of {spec.dims} exceeds 64-bit range")
    return PredictedSums(c_vertex, c_edge, c_total)


def cube_vertex_sums(grid: np.ndarray) -> np.ndarray:
    """Sum of vertex labels per unit cube, indexed by 0-based corner."""
    shape = grid.shape
    out = np.zeros(tuple(n - 1 for n in shape), dtype=np.int64)
    for offsets in itertools.product((0, 1), repeat=len(shape)):
        window = tuple(slice(o, o + n - 1) for o, n in zip(offsets, shape))
        out += grid[window]
    return out


def cube_edge_sums(per_axis: tuple[np.ndarray, ...], spec: GridSpec) -> np.ndarray:
    """Sum of edge labels per unit cube, indexed by 0-based corner."""
    out = np.zeros(tuple(n - 1 for n in spec.dims), dtype=np.int64)
    d = spec.dim
    for a, arr in enumerate(per_axis):
        others = [i for i in range(d) if i != a]
        for offsets in itertools.product((0, 1), repeat=d - 1):
            window = [slice(None)] * d
            window[a] = slice(0, spec.dims[a] - 1)
            for i, o in zip(others, offsets):
                window[i] = slice(o, o + spec.dims[i] - 1)
            out += arr[tuple(window)]
    return out


def _is_range(flat: np.ndarray, start: int, count: int) -> bool:
    if flat.size != count:
        return False
    return bool(np.array_equal(np.sort(flat), np.arange(start, start + count, dtype=np.int64)))


def _report(kind: str, bijective: bool, sums: np.ndarray, predicted: int) -> MagicReport:
    values = np.unique(sums)
    magic = values.size == 1
    magic_sum = int(values[0]) if magic else None
    return MagicReport(
        kind=kind,
        bijective=bijective,
        cube_sum_values=tuple(int(v) for v in values[:MAX_REPORTED_SUMS]),
        distinct_count=int(values.size),
        magic=magic,
        magic_sum=magic_sum,
        predicted_sum=predicted,
        matches_prediction=(magic_sum == predicted) if magic else None,
    )


def verify_vertex_magic(spec: GridSpec, f: VertexLabeling) -> MagicReport:
    """Scan all cubes of a vertex labeling; report sums and bijectivity."""
    if f.spec != spec:
        raise SpecMismatch(f"labeling over {f.spec.dims}, expected {spec.dims}")
    bijective = _is_range(f.flat, 1, spec.vertex_count)
    sums = cube_vertex_sums(f.grid)
    return _report("vertex", bijective, sums, closed_form_sums(spec).c_vertex)


def verify_edge_magic(spec: GridSpec, g: EdgeLabeling) -> MagicReport:
    """Scan all cubes of an edge labeling; report sums and bijectivity."""
    if g.spec != spec:
        raise SpecMismatch(f"labeling over {g.spec.dims}, expected {spec.dims}")
    bijective = _is_range(g.flat, 1, spec.edge_count)
    sums = cube_edge_sums(g.per_axis, spec)
    return _report("edge", bijective, sums, closed_form_sums(spec).c_edge)


def verify_supermagic(spec: GridSpec, total: TotalLabeling) -> MagicReport:
    """Scan a total labeling; bijectivity includes the range split.

    The `bijective` flag holds only when vertex labels are exactly
    [1, |V|] and edge labels exactly [|V|+1, |V|+|E|], which together are
    equivalent to a joint bijection satisfying the supermagic condition.
    """
    if total.spec != spec:
        raise SpecMismatch(f"labeling over {total.spec.dims}, expected {spec.dims}")
    nv = spec.vertex_count
    bijective = _is_range(total.vertex_flat, 1, nv) and _is_range(
        total.edge_flat, nv + 1, spec.edge_count
    )
    sums = cube_vertex_sums(total.vertex_grid) + cube_edge_sums(total.edge_per_axis, spec)
    return _report("total", bijective, sums, closed_form_sums(spec).c_total)
