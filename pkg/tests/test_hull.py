import pytest

from limwork import ConvexHull, Workspace, gift_wrap_hull, oracle_hull
from limwork.edges import HullEdge
from limwork.hull import DEFAULT_BUDGET, hull_vertices

from conftest import collect, instance


def test_right_triangle(right_triangle):
    assert collect(gift_wrap_hull, right_triangle) == [
        HullEdge(0, 1), HullEdge(1, 2), HullEdge(2, 0)
    ]


def test_degenerate_sizes():
    assert collect(gift_wrap_hull, [(3, 3)]) == []
    assert collect(gift_wrap_hull, [(0, 0), (1, 0)]) == [HullEdge(0, 1), HullEdge(1, 0)]


def test_collinear_points_skip_interior():
    pts = [(0, 0), (1, 0), (2, 0), (2, 2), (0, 2), (1, 1)]
    assert hull_vertices(collect(gift_wrap_hull, pts)) == [0, 2, 3, 4]


@pytest.mark.parametrize("seed", range(5))
def test_matches_monotone_chain(seed):
    ps = instance(200, seed, "none")
    ws = Workspace(DEFAULT_BUDGET)
    edges = collect(gift_wrap_hull, ps, workspace=ws)
    assert hull_vertices(edges) == oracle_hull(ps)
    assert ws.peak <= DEFAULT_BUDGET


def test_estimator():
    est = ConvexHull().fit([[0, 0], [4, 0], [0, 4], [1, 1]])
    assert est.vertices_ == [0, 1, 2]
    assert ConvexHull().fit([[5, 5]]).vertices_ == [0]
