from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from limwork.exact import (
    Bisector,
    CirclePosition,
    CollinearBase,
    DuplicateSites,
    Orientation,
    PointSet,
    Ray,
    bisector,
    check_general_position,
    find_cocircular,
    incircle,
    line_line_intersection,
    orientation,
    ray_line_intersection,
    require_general_position,
    squared_distance,
)
from limwork.exact import GeneralPositionViolation


@pytest.mark.parametrize("pts, expected", [
    (((0, 0), (1, 0), (0, 1)), Orientation.CCW),
    (((0, 0), (1, 1), (2, 2)), Orientation.COLLINEAR),
    (((0, 0), (0, 1), (1, 0)), Orientation.CW),
])
def test_orientation(pts, expected):
    assert orientation(*pts) == expected


@pytest.mark.parametrize("d, expected", [
    ((0, 1), CirclePosition.COCIRCULAR),
])
def test_incircle_square(d, expected):
    assert incircle((0, 0), (1, 0), (1, 1), d) == expected


def test_incircle_inside_outside():
    base = ((0, 0), (2, 0), (0, 2))
    assert incircle(*base, (1, 1)) == CirclePosition.INSIDE
    assert incircle(*base, (5, 5)) == CirclePosition.OUTSIDE
    # orientation of the base does not matter
    assert incircle((0, 0), (0, 2), (2, 0), (1, 1)) == CirclePosition.INSIDE


def test_incircle_collinear_base():
    with pytest.raises(CollinearBase):
        incircle((0, 0), (1, 1), (2, 2), (0, 1))


def _line(b: Bisector):
    """Normalized (a, b, c) so lines compare regardless of scaling."""
    k = next(v for v in (b.a, b.b) if v != 0)
    return b.a / k, b.b / k, b.c / k


@pytest.mark.parametrize("q, line", [
    ((2, 0), (1, 0, 1)),
    ((0, 2), (0, 1, 1)),
    ((2, 2), (1, 1, 2)),
])
def test_bisector_lines(q, line):
    ps = PointSet([(0, 0), q])
    assert _line(bisector(ps, 0, 1)) == line


def test_bisector_rejects_duplicates():
    ps = PointSet([(0, 0), (0, 0)])
    with pytest.raises(DuplicateSites):
        bisector(ps, 0, 1)
    with pytest.raises(DuplicateSites):
        bisector(ps, 0, 0)


def test_ray_line_intersection():
    b = bisector(PointSet([(0, 0), (2, 0)]), 0, 1)
    assert ray_line_intersection(Ray((0, 0), (1, 0)), b) == ((1, 0), 1)
    assert ray_line_intersection(Ray((0, 0), (0, 1)), b) is None
    assert ray_line_intersection(Ray((3, 0), (1, 0)), b) is None


def test_ray_needs_direction():
    with pytest.raises(ValueError):
        Ray((0, 0), (0, 0))


def test_line_line_intersection():
    tri = PointSet([(0, 0), (4, 0), (0, 4)])
    assert line_line_intersection(bisector(tri, 0, 1), bisector(tri, 0, 2)) == (2, 2)
    x1 = bisector(PointSet([(0, 0), (2, 0)]), 0, 1)
    x3 = bisector(PointSet([(0, 0), (6, 0)]), 0, 1)
    assert line_line_intersection(x1, x3) is None
    diag = bisector(PointSet([(0, 0), (2, 2)]), 0, 1)
    assert line_line_intersection(diag, x1) == (1, 1)


def test_intersection_is_equidistant():
    ps = PointSet([(Fraction(1, 3), 0), (5, Fraction(2, 7)), (-1, 4)])
    v = line_line_intersection(bisector(ps, 0, 1), bisector(ps, 0, 2))
    d = {squared_distance(v, ps[k]) for k in range(3)}
    assert len(d) == 1


def test_general_position_examples():
    v = check_general_position([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert v.kind == "cocircular" and sorted(v.indices) == [0, 1, 2, 3]
    v = check_general_position([(0, 0), (1, 1), (2, 2), (5, 0)])
    assert v.kind == "collinear" and sorted(v.indices) == [0, 1, 2]
    assert check_general_position([(0, 0), (4, 0), (1, 2)], distinct_lengths=True) is None


def test_general_position_duplicates_and_lengths():
    assert check_general_position([(0, 0), (1, 2), (0, 0)]).kind == "duplicate"
    v = check_general_position([(0, 0), (4, 0), (0, 4)], distinct_lengths=True)
    assert v.kind == "equal-length"
    assert check_general_position([(0, 0), (4, 0), (0, 4)]) is None
    with pytest.raises(GeneralPositionViolation):
        require_general_position([(0, 0), (1, 1), (3, 3)])


def test_cocircular_brute_force_agreement():
    import itertools
    import random

    rng = random.Random(5)
    for _ in range(40):
        pts = [(rng.randrange(7), rng.randrange(7)) for _ in range(7)]
        ps = PointSet(pts)
        if ps.duplicate_pair() or check_general_position(ps, cocircular=False):
            continue
        brute = any(
            incircle(ps[a], ps[b], ps[c], ps[d]) == CirclePosition.COCIRCULAR
            for a, b, c, d in itertools.combinations(range(7), 4)
        )
        assert (find_cocircular(ps) is not None) == brute


def test_pointset_scaled_frame():
    ps = PointSet([("1/2", "0.25"), (3, Fraction(-2, 3))])
    assert ps.scale == 12
    assert (ps.xs, ps.ys) == ((6, 36), (3, -8))
    assert ps.point(6, 3) == (Fraction(1, 2), Fraction(1, 4))
    with pytest.raises(ValueError):
        PointSet([(float("nan"), 0)])
    with pytest.raises(ValueError):
        PointSet([(1, 2, 3)])


coord = st.integers(-10**6, 10**6)
point = st.tuples(coord, coord)


@given(point, point, point)
def test_orientation_antisymmetric(a, b, c):
    assert orientation(a, b, c) == orientation(b, c, a)
    assert orientation(a, b, c) == -orientation(b, a, c)


@given(point, point, point, point, point)
def test_incircle_translation_and_order_invariant(a, b, c, d, t):
    assume(orientation(a, b, c) != Orientation.COLLINEAR)
    moved = [(p[0] + t[0], p[1] + t[1]) for p in (a, b, c, d)]
    assert incircle(*moved) == incircle(a, b, c, d)
    assert incircle(b, a, c, d) == incircle(a, b, c, d)


@given(point, point, point)
def test_bisector_equidistance(p, q, r):
    assume(len({p, q, r}) == 3 and orientation(p, q, r) != Orientation.COLLINEAR)
    ps = PointSet([p, q, r])
    v = line_line_intersection(bisector(ps, 0, 1), bisector(ps, 1, 2))
    assert squared_distance(v, p) == squared_distance(v, q) == squared_distance(v, r)
    assert incircle(p, q, r, v) == CirclePosition.INSIDE
