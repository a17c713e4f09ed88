from fractions import Fraction

import numpy as np
import pytest
from sklearn.base import clone

from limwork import (
    ConvexHull,
    DelaunayTriangulation,
    DuplicatePoints,
    EuclideanMST,
    PointSet,
    VoronoiDiagram,
    check_points,
    oracle_delaunay,
)

from conftest import instance


def test_check_points_accepts_common_inputs():
    a = check_points(np.array([[0, 0], [1.5, 2]]))
    b = check_points([("0", 0), (Fraction(3, 2), "2")])
    assert list(a) == list(b)
    ps = PointSet([(0, 0), (1, 1)])
    assert check_points(ps) is ps


@pytest.mark.parametrize("bad", [
    np.zeros((3, 3)),
    [(0, 0, 0)],
    [(0, float("inf"))],
])
def test_check_points_rejects_shapes(bad):
    with pytest.raises(ValueError):
        check_points(bad)


def test_check_points_rejects_duplicates_and_empty():
    with pytest.raises(DuplicatePoints):
        check_points([(0, 0), (0, 0)])
    with pytest.raises(ValueError):
        check_points([], min_points=1)


def test_params_and_clone():
    est = VoronoiDiagram(s=4, budget=1000)
    assert est.get_params() == {"s": 4, "budget": 1000}
    assert clone(est).get_params() == est.get_params()
    est.set_params(s=2)
    assert est.s == 2
    assert EuclideanMST().get_params() == {"budget": None}


def test_fit_attributes():
    ps = instance(20, 6)
    est = DelaunayTriangulation().fit(ps)
    assert set(est.edges_) == oracle_delaunay(ps)
    assert est.n_sites_ == 20 and est.peak_cells_ > 0 and est.steps_ > 0
    assert DelaunayTriangulation().fit_transform(ps) == est.edges_


def test_explicit_budget_is_enforced():
    from limwork import BudgetExceeded

    with pytest.raises(BudgetExceeded):
        VoronoiDiagram(budget=4).fit(instance(10, 1))


def test_estimators_need_two_sites_except_hull():
    with pytest.raises(ValueError):
        VoronoiDiagram().fit([(0, 0)])
    assert ConvexHull().fit([(0, 0)]).edges_ == []
