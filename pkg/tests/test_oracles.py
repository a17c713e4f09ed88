import pytest

from limwork import TieDetected, oracle_delaunay, oracle_emst, oracle_hull, oracle_voronoi
from limwork.edges import DelaunayEdge
from limwork.oracles import audit_diagram

from conftest import EMST_TRIANGLE, instance


def test_right_triangle(right_triangle):
    diagram = oracle_voronoi(right_triangle)
    assert diagram.vertices == {(2, 2)}
    assert len(diagram.edges) == 3
    assert audit_diagram(right_triangle, diagram) == []


@pytest.mark.parametrize("seed", range(5))
def test_audit_and_euler(seed):
    ps = instance(60, seed)
    assert audit_diagram(ps, oracle_voronoi(ps)) == []


def test_audit_catches_missing_edge():
    ps = instance(20, 4)
    diagram = oracle_voronoi(ps)
    diagram.edges.pop()
    assert audit_diagram(ps, diagram)


def test_delaunay_is_dual_and_planar_count():
    ps = instance(50, 7)
    delaunay = oracle_delaunay(ps)
    h = len(oracle_hull(ps))
    assert len(delaunay) == 3 * len(ps) - 3 - h


@pytest.mark.parametrize("seed", range(4))
def test_emst_subset_of_delaunay(seed):
    ps = instance(40, seed, "lengths")
    tree = oracle_emst(ps)
    assert len(tree) == len(ps) - 1
    assert tree <= oracle_delaunay(ps)


def test_emst_fixture_and_ties(right_triangle):
    assert oracle_emst(EMST_TRIANGLE) == {DelaunayEdge(0, 1), DelaunayEdge(1, 2)}
    with pytest.raises(TieDetected):
        oracle_emst(right_triangle)
