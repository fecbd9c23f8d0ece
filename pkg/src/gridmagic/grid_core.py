"""Grid graphs and their unit-cube subgraphs.

A grid graph with side lengths (n1, ..., nd) has vertex set
[n1] x ... x [nd] (1-based lattice points); two points are adjacent when
they differ by one in exactly one coordinate. The subgraphs isomorphic to
the d-cube are exactly the axis-aligned unit cubes, one per corner in
[n1-1] x ... x [nd-1], which is what makes exhaustive verification a
simple sweep instead of a subgraph-isomorphism search.

Side lengths are kept in non-increasing order (the labeling constructions
require it); `canonicalize` sorts arbitrary user input and reports where
each axis went so callers can translate coordinates back and forth.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .errors import (
    CoordOutOfRange,
    DimensionOrderViolation,
    DimensionTooSmall,
    Overflow,
)

# Counts, ranks and cube sums all live in signed 64-bit range; specs whose
# element count would not fit are refused at construction time.
MAX_ELEMENT_COUNT = 2**62

VertexCoord = tuple[int, ...]


class EdgeId(NamedTuple):
    """Unit edge joining `base` and `base + e_axis`; `axis` is 1-based."""

    base: VertexCoord
    axis: int


class CubeId(NamedTuple):
    """Unit cube on the vertex set ``corner + {0,1}^d``."""

    corner: VertexCoord


@dataclass(frozen=True)
class GridSpec:
    """Side lengths of a grid graph, in canonical non-increasing order."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(n) for n in self.dims)
        object.__setattr__(self, "dims", dims)
        if len(dims) < 2:
            raise DimensionTooSmall(f"need at least 2 axes, got {len(dims)}")
        if any(n < 2 for n in dims):
            raise DimensionTooSmall(f"every side length must be >= 2, got {dims}")
        if any(a < b for a, b in zip(dims, dims[1:])):
            raise DimensionOrderViolation(
                f"side lengths must be non-increasing, got {dims}"
            )
        if self.vertex_count + self.edge_count > MAX_ELEMENT_COUNT:
            raise Overflow(f"|V|+|E| of {dims} exceeds {MAX_ELEMENT_COUNT}")

    @property
    def dim(self) -> int:
        return len(self.dims)

    @property
    def vertex_count(self) -> int:
        count = 1
        for n in self.dims:
            count *= n
        return count

    @property
    def edge_count(self) -> int:
        total = self.vertex_count
        return sum((n - 1) * (total // n) for n in self.dims)

    @property
    def cube_count(self) -> int:
        count = 1
        for n in self.dims:
            count *= n - 1
        return count

    @property
    def cube_edge_count(self) -> int:
        """Number of edges of a single d-cube."""
        return self.dim * 2 ** (self.dim - 1)

    def prefix(self) -> GridSpec:
        """The grid spanned by all axes but the last (requires dim >= 3)."""
        if self.dim < 3:
            raise DimensionTooSmall("prefix of a 2-dimensional grid is a path")
        return GridSpec(self.dims[:-1])


def canonicalize(dims: Sequence[int]) -> tuple[GridSpec, tuple[int, ...]]:
    """Sort side lengths into non-increasing order, stably.

    Returns the canonical spec together with the 1-based axis permutation:
    caller axis ``i`` lands at canonical position ``perm[i-1]``. Equal side
    lengths keep their original relative order.
    """
    entries = [int(n) for n in dims]
    if len(entries) < 2:
        raise DimensionTooSmall(f"need at least 2 axes, got {len(entries)}")
    if any(n < 2 for n in entries):
        raise DimensionTooSmall(f"every side length must be >= 2, got {tuple(entries)}")
    order = sorted(range(len(entries)), key=lambda i: (-entries[i], i))
    perm = [0] * len(entries)
    for canonical_pos, caller_axis in enumerate(order, start=1):
        perm[caller_axis] = canonical_pos
    spec = GridSpec(tuple(entries[i] for i in order))
    return spec, tuple(perm)


def _check_coord(spec: GridSpec, v: VertexCoord) -> None:
    if len(v) != spec.dim or any(not 1 <= c <= n for c, n in zip(v, spec.dims)):
        raise CoordOutOfRange(f"{v} not a vertex of the {spec.dims} grid")


def vertex_rank(spec: GridSpec, v: VertexCoord) -> int:
    """Row-major position of a vertex, in [0, |V|)."""
    _check_coord(spec, v)
    rank = 0
    for c, n in zip(v, spec.dims):
        rank = rank * n + (c - 1)
    return rank


def vertex_unrank(spec: GridSpec, rank: int) -> VertexCoord:
    """Inverse of `vertex_rank`."""
    if not 0 <= rank < spec.vertex_count:
        raise CoordOutOfRange(f"rank {rank} not in [0, {spec.vertex_count})")
    coords = []
    for n in reversed(spec.dims):
        coords.append(rank % n + 1)
        rank //= n
    return tuple(reversed(coords))


def enumerate_vertices(spec: GridSpec) -> Iterator[VertexCoord]:
    """All vertices in row-major (rank) order."""
    return itertools.product(*(range(1, n + 1) for n in spec.dims))


def _axis_edge_bases(spec: GridSpec, axis: int) -> Iterator[VertexCoord]:
    ranges = [range(1, n + 1) for n in spec.dims]
    ranges[axis - 1] = range(1, spec.dims[axis - 1])
    return itertools.product(*ranges)


def enumerate_edges(spec: GridSpec) -> Iterator[EdgeId]:
    """All edges, grouped by axis ascending, bases in row-major order."""
    for axis in range(1, spec.dim + 1):
        for base in _axis_edge_bases(spec, axis):
            yield EdgeId(base, axis)


def _check_edge(spec: GridSpec, e: EdgeId) -> None:
    if not 1 <= e.axis <= spec.dim:
        raise CoordOutOfRange(f"axis {e.axis} not in [1, {spec.dim}]")
    _check_coord(spec, e.base)
    if e.base[e.axis - 1] >= spec.dims[e.axis - 1]:
        raise CoordOutOfRange(f"edge base {e.base} has no room along axis {e.axis}")


def edge_rank(spec: GridSpec, e: EdgeId) -> int:
    """Position of an edge in `enumerate_edges` order."""
    _check_edge(spec, e)
    total = spec.vertex_count
    rank = sum((n - 1) * (total // n) for n in spec.dims[: e.axis - 1])
    within = 0
    for i, (c, n) in enumerate(zip(e.base, spec.dims)):
        size = n - 1 if i == e.axis - 1 else n
        within = within * size + (c - 1)
    return rank + within


def edge_endpoints(e: EdgeId) -> tuple[VertexCoord, VertexCoord]:
    """Both endpoints of an edge, base first."""
    other = tuple(c + 1 if i == e.axis - 1 else c for i, c in enumerate(e.base))
    return e.base, other


def enumerate_cubes(spec: GridSpec) -> Iterator[CubeId]:
    """All unit cubes, corners in row-major order."""
    for corner in itertools.product(*(range(1, n) for n in spec.dims)):
        yield CubeId(corner)


def cube_vertices(cube: CubeId) -> list[VertexCoord]:
    """The 2^d vertices of a unit cube, in binary-offset order."""
    corner = cube.corner
    return [
        tuple(c + o for c, o in zip(corner, offsets))
        for offsets in itertools.product((0, 1), repeat=len(corner))
    ]


def cube_edges(cube: CubeId) -> list[EdgeId]:
    """The d * 2^(d-1) edges of a unit cube, grouped by axis."""
    corner = cube.corner
    d = len(corner)
    edges = []
    for axis in range(1, d + 1):
        for offsets in itertools.product((0, 1), repeat=d - 1):
            it = iter(offsets)
            base = tuple(
                c if i == axis - 1 else c + next(it) for i, c in enumerate(corner)
            )
            edges.append(EdgeId(base, axis))
    return edges


def check_h_covering(spec: GridSpec) -> bool:
    """Whether every edge lies in at least one unit cube (exhaustive check)."""
    covered: set[EdgeId] = set()
    for cube in enumerate_cubes(spec):
        covered.update(cube_edges(cube))
    return all(e in covered for e in enumerate_edges(spec))
