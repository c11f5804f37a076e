import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geomatch.configurations import embedding_agrees, gen_convex, gen_general, gen_wheel
from geomatch.geometry import (
    COORD_LIMIT,
    Config,
    Edge,
    GeneralPositionError,
    Line,
    Point,
    PointSet,
    boundary_edges_of,
    chords_cross_cyclic,
    convex_hull,
    edges_cross,
    hull_indices,
    orient,
    orient_idx,
    proper_cross_exact,
    radial_crosses_chord,
)

from helpers import exact_copy, pts

coord = st.integers(-COORD_LIMIT, COORD_LIMIT)
point = st.builds(Point, coord, coord)


def test_orient_examples():
    assert orient(Point(0, 0), Point(1, 0), Point(0, 1)) == 1
    assert orient(Point(0, 0), Point(1, 1), Point(2, 2)) == 0
    assert orient(Point(0, 0), Point(0, 1), Point(1, 0)) == -1


@given(point, point, point)
def test_orient_antisymmetric(p, q, r):
    assert orient(p, q, r) == -orient(p, r, q)
    assert orient(p, q, r) == orient(q, r, p)


def test_point_bounds_and_types():
    with pytest.raises(ValueError):
        Point(COORD_LIMIT + 1, 0)
    with pytest.raises(TypeError):
        Point(0.5, 0)
    with pytest.raises(TypeError):
        Point(True, 0)


def test_edge_normalized():
    assert Edge.of(5, 2) == Edge(2, 5)
    assert Edge.of(2, 5).other(2) == 5
    with pytest.raises(ValueError):
        Edge.of(3, 3)


def test_line_canonical():
    ln = Line.make(-4, 2, 6)
    assert (ln.a, ln.b, ln.c) == (2, -1, -3)
    assert Line.make(0, -3, 9) == Line(0, 1, -3)
    through = Line.through(Point(0, 0), Point(2, 2))
    assert through.side(Point(1, 1)) == 0
    assert through.side(Point(0, 1)) == -through.side(Point(1, 0))
    with pytest.raises(ValueError):
        Line.make(0, 0, 1)
    assert Line.make(1, 2, 0).parallel_to(Line.make(2, 4, 7))


def test_pointset_invariants():
    with pytest.raises(ValueError):
        pts((0, 0), (1, 0), (0, 1))
    with pytest.raises(ValueError):
        PointSet(gen_wheel(8).points, Config.WHEEL, center=0)
    w = gen_wheel(8)
    assert w.labels[-1] == "x" and w.circle_count == 7 and w.center == 7


def test_proper_cross_examples():
    ps = pts((0, 0), (2, 2), (0, 2), (2, 0))
    assert proper_cross_exact(Edge(0, 1), Edge(2, 3), ps)
    ps = pts((0, 0), (1, 0), (0, 1), (1, 1))
    assert not proper_cross_exact(Edge(0, 1), Edge(2, 3), ps)
    ps = pts((0, 0), (4, 4), (1, 1), (7, 2))
    with pytest.raises(GeneralPositionError):
        proper_cross_exact(Edge(0, 1), Edge(2, 3), ps)
    # shared endpoints never cross
    assert not proper_cross_exact(Edge(0, 1), Edge(0, 2), ps)


def test_chords_cross_cyclic_examples():
    assert chords_cross_cyclic(0, 2, 1, 3, 4)
    assert not chords_cross_cyclic(0, 1, 2, 3, 4)
    assert not chords_cross_cyclic(0, 6, 2, 5, 12)
    exact = exact_copy(gen_convex(12))
    assert not proper_cross_exact(Edge(0, 6), Edge(2, 5), exact)
    with pytest.raises(ValueError):
        chords_cross_cyclic(0, 2, 2, 3, 6)


def test_radial_crosses_chord_examples():
    assert radial_crosses_chord(2, 1, 4, 13)
    assert not radial_crosses_chord(0, 1, 4, 13)
    assert radial_crosses_chord(5, 4, 6, 13)
    with pytest.raises(ValueError):
        radial_crosses_chord(1, 0, 3, 12)
    # the first example against the drawing of a 13-gon with its centre
    exact = exact_copy(gen_wheel(14))
    assert proper_cross_exact(Edge(2, 13), Edge(1, 4), exact)


def test_edges_cross_examples():
    c12 = gen_convex(12)
    assert not edges_cross(Edge(1, 2), Edge(0, 3), c12)
    w = gen_wheel(14)
    x = w.center
    assert not edges_cross(Edge.of(x, 0), Edge(1, 6), w)
    assert edges_cross(Edge.of(x, 3), Edge(1, 6), w)
    assert edges_cross(Edge.of(x, 3), Edge(1, 6), exact_copy(w))
    assert not edges_cross(Edge.of(x, 3), Edge.of(x, 5), w)


@pytest.mark.parametrize("m", range(5, 26))
def test_chord_backend_agreement(m):
    ps = gen_wheel(m + 1) if m % 2 else gen_convex(m)
    assert embedding_agrees(ps)
    exact = exact_copy(ps)
    rng = random.Random(m)
    for _ in range(1000 // 21 + 1):
        a, b, c, d = rng.sample(range(m), 4)
        assert chords_cross_cyclic(a, b, c, d, m) == proper_cross_exact(Edge.of(a, b), Edge.of(c, d), exact)


def test_edges_cross_symmetric():
    rng = random.Random(3)
    for ps in (gen_convex(10), gen_wheel(12), gen_general(10, 4)):
        for _ in range(200):
            a, b, c, d = rng.sample(range(ps.size), 4)
            e, f = Edge.of(a, b), Edge.of(c, d)
            assert edges_cross(e, f, ps) == edges_cross(f, e, ps)


def test_orient_idx_matches_drawing():
    for ps in (gen_convex(14), gen_wheel(16)):
        exact = exact_copy(ps)
        for i, j, k in [(0, 3, 7), (ps.size - 1, 2, 9), (5, ps.size - 1, 1), (4, 1, ps.size - 1)]:
            assert orient_idx(ps, i, j, k) == orient_idx(exact, i, j, k)
    with pytest.raises(ValueError):
        orient_idx(gen_convex(6), 1, 1, 2)


def test_convex_hull_examples():
    square = pts((0, 0), (1, 0), (1, 1), (0, 1))
    assert convex_hull(square) == [0, 1, 2, 3]
    assert convex_hull(gen_wheel(8)) == list(range(7))
    parabola = pts(*[(x, x * x) for x in range(6)])
    assert sorted(convex_hull(parabola)) == list(range(6))


def test_boundary_edges_examples():
    assert boundary_edges_of(gen_convex(6)) == {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(0, 5)}
    assert boundary_edges_of(gen_wheel(6)) == {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(0, 4)}


def test_general_hull_cross_check():
    found = False
    for seed in range(60):
        ps = gen_general(8, seed)
        hull = convex_hull(ps)
        be = boundary_edges_of(ps)
        assert len(be) == len(hull)
        for i in range(ps.size):
            if i not in hull:
                # an interior point is strictly left of every counterclockwise hull edge
                assert all(orient_idx(ps, hull[t], hull[(t + 1) % len(hull)], i) == 1 for t in range(len(hull)))
        # the combinatorial hull of the drawing agrees with the gift wrap on exact coordinates
        assert hull == hull_indices(ps)
        found |= len(hull) == 5
    assert found


def test_boundary_edges_never_crossed():
    for ps in (gen_general(10, 1), gen_convex(8), gen_wheel(10)):
        for e in boundary_edges_of(ps):
            for a in range(ps.size):
                for b in range(a + 1, ps.size):
                    assert not edges_cross(e, Edge(a, b), ps)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_random_general_crossing_consistency(seed):
    ps = gen_general(8, seed)
    rng = random.Random(seed)
    a, b, c, d = rng.sample(range(8), 4)
    e, f = Edge.of(a, b), Edge.of(c, d)
    crossing = edges_cross(e, f, ps)
    # two segments cross iff each separates the other's endpoints
    sep1 = orient_idx(ps, a, b, c) != orient_idx(ps, a, b, d)
    sep2 = orient_idx(ps, c, d, a) != orient_idx(ps, c, d, b)
    assert crossing == (sep1 and sep2)
