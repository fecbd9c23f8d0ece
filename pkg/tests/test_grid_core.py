"""Grid model: canonical specs, ranks, enumerations, cubes, covering."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridmagic import (
    CoordOutOfRange,
    CubeId,
    DimensionOrderViolation,
    DimensionTooSmall,
    EdgeId,
    GridSpec,
    Overflow,
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


@st.composite
def small_specs(draw, max_d=4, max_n=5):
    d = draw(st.integers(2, max_d))
    dims = sorted((draw(st.integers(2, max_n)) for _ in range(d)), reverse=True)
    return GridSpec(tuple(dims))


def test_canonicalize_sorts_descending_stably():
    spec, perm = canonicalize([3, 5, 3])
    assert spec.dims == (5, 3, 3)
    assert perm == (2, 1, 3)


def test_canonicalize_identity_when_sorted():
    spec, perm = canonicalize([5, 3])
    assert spec.dims == (5, 3)
    assert perm == (1, 2)


def test_canonicalize_rejects_small_input():
    with pytest.raises(DimensionTooSmall):
        canonicalize([2])
    with pytest.raises(DimensionTooSmall):
        canonicalize([4, 1])


def test_gridspec_rejects_noncanonical_and_overflowing():
    with pytest.raises(DimensionOrderViolation):
        GridSpec((3, 5))
    with pytest.raises(DimensionTooSmall):
        GridSpec((5,))
    with pytest.raises(Overflow):
        GridSpec((2**32, 2**32))


def test_counts():
    spec = GridSpec((5, 3))
    assert spec.vertex_count == 15
    assert spec.edge_count == 22
    assert spec.cube_count == 8
    assert GridSpec((5, 3, 3)).edge_count == 96
    # layer decomposition: three 5x3 layers plus two sets of connecting edges
    assert GridSpec((5, 3, 3)).edge_count == 3 * 22 + 2 * 15


def test_vertex_rank_corners():
    spec = GridSpec((5, 3))
    assert vertex_rank(spec, (1, 1)) == 0
    assert vertex_rank(spec, (5, 3)) == spec.vertex_count - 1


def test_vertex_rank_matches_enumeration_order():
    spec = GridSpec((5, 3, 3))
    order = list(enumerate_vertices(spec))
    assert vertex_rank(spec, (2, 1, 2)) == order.index((2, 1, 2)) == 10
    for rank, v in enumerate(order):
        assert vertex_rank(spec, v) == rank


def test_vertex_rank_out_of_range():
    spec = GridSpec((5, 3))
    with pytest.raises(CoordOutOfRange):
        vertex_rank(spec, (6, 1))
    with pytest.raises(CoordOutOfRange):
        vertex_rank(spec, (1, 0))
    with pytest.raises(CoordOutOfRange):
        vertex_unrank(spec, 15)


@settings(max_examples=60, deadline=None)
@given(small_specs(), st.data())
def test_unrank_inverts_rank(spec, data):
    rank = data.draw(st.integers(0, spec.vertex_count - 1))
    assert vertex_rank(spec, vertex_unrank(spec, rank)) == rank


@pytest.mark.parametrize(
    "dims,count", [((2, 2), 4), ((5, 3), 22), ((5, 3, 3), 96)]
)
def test_edge_enumeration_count(dims, count):
    spec = GridSpec(dims)
    edges = list(enumerate_edges(spec))
    assert len(edges) == count == spec.edge_count
    assert len(set(edges)) == count


@settings(max_examples=40, deadline=None)
@given(small_specs())
def test_edge_count_formula_matches_enumeration(spec):
    assert len(list(enumerate_edges(spec))) == spec.edge_count


def test_edge_enumeration_order_and_rank():
    spec = GridSpec((4, 3, 2))
    edges = list(enumerate_edges(spec))
    assert [e.axis for e in edges] == sorted(e.axis for e in edges)
    for pos, e in enumerate(edges):
        assert edge_rank(spec, e) == pos
    with pytest.raises(CoordOutOfRange):
        edge_rank(spec, EdgeId((4, 1, 1), 1))  # no room along axis 1
    with pytest.raises(CoordOutOfRange):
        edge_rank(spec, EdgeId((1, 1, 1), 4))


def test_edge_endpoints():
    assert edge_endpoints(EdgeId((2, 3), 1)) == ((2, 3), (3, 3))
    assert edge_endpoints(EdgeId((2, 3, 1), 3)) == ((2, 3, 1), (2, 3, 2))


@pytest.mark.parametrize("dims,count", [((2, 2), 1), ((5, 3), 8), ((5, 3, 3), 16)])
def test_cube_enumeration_count(dims, count):
    spec = GridSpec(dims)
    cubes = list(enumerate_cubes(spec))
    assert len(cubes) == count == spec.cube_count


def test_cube_vertices_of_known_cube():
    got = set(cube_vertices(CubeId((2, 1, 1))))
    assert got == {
        (2, 1, 1), (3, 1, 1), (2, 2, 1), (2, 1, 2),
        (3, 2, 1), (3, 1, 2), (2, 2, 2), (3, 2, 2),
    }


def test_cube_vertices_of_single_square():
    assert set(cube_vertices(CubeId((1, 1)))) == {(1, 1), (1, 2), (2, 1), (2, 2)}


@settings(max_examples=40, deadline=None)
@given(small_specs())
def test_cube_vertex_parity_split(spec):
    for cube in enumerate_cubes(spec):
        verts = cube_vertices(cube)
        assert len(verts) == 2**spec.dim
        even = sum(1 for v in verts if sum(v) % 2 == 0)
        assert even == 2 ** (spec.dim - 1)


def test_cube_edges_counts_and_membership():
    for corner, d in [((1, 1), 2), ((2, 1, 1), 3), ((1, 1, 1, 1), 4)]:
        cube = CubeId(corner)
        edges = cube_edges(cube)
        assert len(edges) == d * 2 ** (d - 1)
        verts = set(cube_vertices(cube))
        for e in edges:
            a, b = edge_endpoints(e)
            assert a in verts and b in verts


def test_cube_edges_of_known_cube():
    got = set(cube_edges(CubeId((2, 1, 1))))
    want = {
        EdgeId((2, 1, 1), 1), EdgeId((2, 2, 1), 1), EdgeId((2, 1, 2), 1), EdgeId((2, 2, 2), 1),
        EdgeId((2, 1, 1), 2), EdgeId((3, 1, 1), 2), EdgeId((2, 1, 2), 2), EdgeId((3, 1, 2), 2),
        EdgeId((2, 1, 1), 3), EdgeId((3, 1, 1), 3), EdgeId((2, 2, 1), 3), EdgeId((3, 2, 1), 3),
    }
    assert got == want


@pytest.mark.parametrize("dims", [(2, 2), (5, 3), (9, 4, 2, 2)])
def test_every_edge_covered(dims):
    assert check_h_covering(GridSpec(dims))


@settings(max_examples=25, deadline=None)
@given(small_specs(max_d=3, max_n=4))
def test_edge_cover_multiplicity(spec):
    counts: dict[EdgeId, int] = {e: 0 for e in enumerate_edges(spec)}
    for cube in enumerate_cubes(spec):
        for e in cube_edges(cube):
            counts[e] += 1
    for e, got in counts.items():
        expect = 1
        for j, (c, n) in enumerate(zip(e.base, spec.dims)):
            if j == e.axis - 1:
                continue
            expect *= 2 if 2 <= c <= n - 1 else 1
        assert got == expect >= 1
