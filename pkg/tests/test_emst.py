import pytest

from limwork import (
    EuclideanMST,
    GeneralPositionViolation,
    StepCounter,
    Workspace,
    enumerate_emst,
    is_emst_edge,
    oracle_delaunay,
    oracle_emst,
)
from limwork.edges import DelaunayEdge
from limwork.emst import face_walk
from limwork.oracles import bottleneck_path_exists

from conftest import collect, instance


def test_fixture(emst_triangle):
    assert set(collect(enumerate_emst, emst_triangle)) == {
        DelaunayEdge(0, 1), DelaunayEdge(1, 2)
    }
    assert is_emst_edge(emst_triangle, 0, 1)
    assert not is_emst_edge(emst_triangle, 0, 2)
    assert is_emst_edge(emst_triangle, 2, 1)


def test_two_sites():
    assert collect(enumerate_emst, [(0, 0), (3, 1)]) == [DelaunayEdge(0, 1)]


def test_equal_lengths_detected(right_triangle):
    with pytest.raises(GeneralPositionViolation) as info:
        collect(enumerate_emst, right_triangle)
    assert info.value.kind == "equal-length"


@pytest.mark.parametrize("seed", range(8))
def test_matches_kruskal(seed):
    ps = instance(30, seed, "lengths")
    log = []
    ws = Workspace(64)
    out = collect(enumerate_emst, ps, workspace=ws, walk_log=log)
    assert set(out) == oracle_emst(ps)
    assert len(out) == len(ps) - 1
    assert all(steps <= 2 * len(ps) for _, _, steps in log)
    assert ws.live == 0


def test_membership_agrees_with_bottleneck():
    ps = instance(25, 11, "lengths")
    delaunay = oracle_delaunay(ps)
    for e in delaunay:
        expected = not bottleneck_path_exists(ps, delaunay, e.i, e.j)
        assert is_emst_edge(ps, e.i, e.j) == expected
        assert is_emst_edge(ps, e.j, e.i) == expected


def test_face_walk_reports_steps():
    ps = instance(20, 2, "lengths")
    e = next(iter(oracle_delaunay(ps)))
    inside, steps = face_walk(ps, e.i, e.j, Workspace(64), StepCounter())
    assert isinstance(inside, bool) and 0 <= steps <= 40


def test_estimator(emst_triangle):
    est = EuclideanMST().fit(emst_triangle)
    assert set(est.edges_) == {DelaunayEdge(0, 1), DelaunayEdge(1, 2)}
    assert est.peak_cells_ <= 64 and est.steps_ > 0
