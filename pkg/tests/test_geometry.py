import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geochrom import (
    COORD_BOUND,
    Orientation,
    Point,
    SharedEndpoint,
    convex_crossing_rule,
    is_general_position,
    orientation,
    regular_polygon_points,
    segments_cross,
)
from oracles import rational_segments_cross

coords = st.integers(min_value=-1000, max_value=1000)
points = st.builds(Point, coords, coords)


def test_orientation_basic_triples():
    assert orientation(Point(0, 0), Point(1, 0), Point(0, 1)) is Orientation.COUNTERCLOCKWISE
    assert orientation(Point(0, 0), Point(1, 1), Point(2, 2)) is Orientation.COLLINEAR
    assert orientation(Point(0, 0), Point(0, 1), Point(1, 0)) is Orientation.CLOCKWISE


@given(points, points, points)
def test_orientation_flips_under_swaps(p, q, r):
    o = orientation(p, q, r)
    flipped = orientation(q, p, r)
    if o is Orientation.COLLINEAR:
        assert flipped is Orientation.COLLINEAR
        assert orientation(p, r, q) is Orientation.COLLINEAR
    else:
        assert flipped.value == -o.value
        assert orientation(p, r, q).value == -o.value


def test_point_rejects_floats_and_overflow():
    with pytest.raises(TypeError):
        Point(0.5, 1)
    with pytest.raises(ValueError):
        Point(COORD_BOUND + 1, 0)
    Point(COORD_BOUND, -COORD_BOUND)  # boundary is allowed


def test_segments_cross_examples():
    assert segments_cross(Point(0, 0), Point(2, 2), Point(0, 2), Point(2, 0))
    assert not segments_cross(Point(0, 0), Point(1, 0), Point(0, 1), Point(1, 1))


def test_segments_cross_shared_endpoint_raises():
    with pytest.raises(SharedEndpoint):
        segments_cross(Point(0, 0), Point(1, 1), Point(0, 0), Point(2, 0))
    with pytest.raises(SharedEndpoint):
        segments_cross(Point(0, 0), Point(0, 0), Point(1, 0), Point(2, 0))


def test_segments_cross_touching_is_false():
    # endpoint of one segment in the interior of the other
    assert not segments_cross(Point(0, 0), Point(4, 0), Point(2, 0), Point(2, 3))
    # collinear overlap
    assert not segments_cross(Point(0, 0), Point(4, 0), Point(1, 0), Point(3, 0))


@given(st.lists(points, min_size=4, max_size=4, unique=True))
def test_segments_cross_symmetric(pts):
    a1, a2, b1, b2 = pts
    assert segments_cross(a1, a2, b1, b2) == segments_cross(b1, b2, a1, a2)
    assert segments_cross(a1, a2, b1, b2) == segments_cross(a2, a1, b1, b2)


@settings(max_examples=300)
@given(st.lists(points, min_size=4, max_size=4, unique=True))
def test_segments_cross_matches_rational_oracle(pts):
    a1, a2, b1, b2 = pts
    expected = rational_segments_cross((a1.x, a1.y), (a2.x, a2.y), (b1.x, b1.y), (b2.x, b2.y))
    assert segments_cross(a1, a2, b1, b2) == expected


def test_general_position_examples():
    assert is_general_position([Point(0, 0), Point(1, 0), Point(0, 1)])
    assert not is_general_position([Point(0, 0), Point(1, 1), Point(2, 2)])
    assert not is_general_position([Point(0, 0), Point(0, 0), Point(1, 2)])


def test_figure1_left_points_are_general_position():
    # checked triple by triple against the orientation oracle
    pts = [(0, -3), (0, 19), (20, 3), (-20, 3), (-12, -20), (12, -20)]
    from oracles import orient

    assert all(orient(a, b, c) != 0 for a, b, c in itertools.combinations(pts, 3))
    assert is_general_position([Point(x, y) for x, y in pts])


def test_hexagon_alternating_chords_cross():
    pts = regular_polygon_points(6)  # label i = index i-1
    assert segments_cross(pts[0], pts[2], pts[1], pts[4])  # {1,3} x {2,5}
    assert segments_cross(pts[0], pts[3], pts[1], pts[5])  # {1,4} x {2,6}


def test_convex_crossing_rule_examples():
    assert convex_crossing_rule(4, (1, 3), (2, 4))
    assert not convex_crossing_rule(4, (1, 2), (3, 4))
    assert convex_crossing_rule(6, (1, 4), (2, 6))  # frozen from the hexagon oracle


def test_convex_crossing_rule_validation():
    with pytest.raises(SharedEndpoint):
        convex_crossing_rule(5, (1, 3), (3, 5))
    with pytest.raises(ValueError):
        convex_crossing_rule(3, (1, 2), (2, 3))
    with pytest.raises(ValueError):
        convex_crossing_rule(4, (0, 2), (1, 3))


@pytest.mark.parametrize("n", range(4, 9))
def test_convex_rule_equals_segments_on_regular_ngon(n):
    pts = regular_polygon_points(n)
    edges = list(itertools.combinations(range(1, n + 1), 2))
    for e1, e2 in itertools.combinations(edges, 2):
        if set(e1) & set(e2):
            continue
        geometric = segments_cross(
            pts[e1[0] - 1], pts[e1[1] - 1], pts[e2[0] - 1], pts[e2[1] - 1]
        )
        assert convex_crossing_rule(n, e1, e2) == geometric


def test_nonconvex_quadruples_have_no_crossings_small_grid():
    # every 4-point general-position subset of a 4x4 grid with triangular hull
    from oracles import orient, point_in_triangle_strict

    grid = [(x, y) for x in range(4) for y in range(4)]
    for quad in itertools.combinations(grid, 4):
        if any(orient(a, b, c) == 0 for a, b, c in itertools.combinations(quad, 3)):
            continue
        inner = [
            p for p in quad
            if point_in_triangle_strict(p, *[q for q in quad if q != p])
        ]
        if not inner:
            continue  # convex position
        pts = [Point(x, y) for x, y in quad]
        for (i, j), (k, l) in itertools.combinations(itertools.combinations(range(4), 2), 2):
            if {i, j} & {k, l}:
                continue
            assert not segments_cross(pts[i], pts[j], pts[k], pts[l])


def test_regular_polygon_points_general_position_and_order():
    for n in (3, 4, 5, 6, 8, 12, 24):
        pts = regular_polygon_points(n)
        assert len(pts) == n
        assert is_general_position(pts)
        if n >= 3:
            # convex and counterclockwise in label order
            for i in range(n):
                a, b, c = pts[i], pts[(i + 1) % n], pts[(i + 2) % n]
                assert orientation(a, b, c) is Orientation.COUNTERCLOCKWISE
