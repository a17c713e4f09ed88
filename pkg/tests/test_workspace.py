import pytest

from limwork.workspace import (
    AlgebraicPoint,
    BoundedInt,
    BudgetExceeded,
    DoubleFree,
    InputRef,
    OutputStream,
    StepCounter,
    Workspace,
    collecting_stream,
)


def test_first_allocation():
    ws = Workspace(1)
    h = ws.alloc(BoundedInt(7))
    assert ws[h] == BoundedInt(7)
    assert (ws.live, ws.peak) == (1, 1)


def test_budget_boundary():
    ws = Workspace(1)
    ws.alloc(BoundedInt(7))
    with pytest.raises(BudgetExceeded):
        ws.alloc(BoundedInt(8))


def test_peak_tracks_maximum_not_total():
    ws = Workspace(4)
    h = ws.alloc(InputRef(0))
    ws.free(h)
    ws.alloc(InputRef(1))
    assert (ws.peak, ws.live) == (1, 1)


def test_double_free():
    ws = Workspace(2)
    h = ws.alloc()
    ws.free(h)
    with pytest.raises(DoubleFree):
        ws.free(h)


def test_free_keeps_peak_and_free_all_empties():
    ws = Workspace(3)
    hs = [ws.alloc() for _ in range(3)]
    for h in hs:
        ws.free(h)
    assert (ws.live, ws.peak) == (0, 3)


def test_only_permitted_cell_kinds():
    ws = Workspace(2)
    h = ws.alloc()
    with pytest.raises(TypeError):
        ws[h] = [1, 2, 3]
    with pytest.raises(TypeError):
        ws.alloc("text")
    ws[h] = AlgebraicPoint(1, 2, 3, (0, 1, 2))


def test_algebraic_point_limits():
    with pytest.raises(ValueError):
        AlgebraicPoint(1, 1, 0)
    with pytest.raises(ValueError):
        AlgebraicPoint(1, 1, 1, (0, 1, 2, 3, 4))


def test_frame_releases_on_error():
    ws = Workspace(4)
    with pytest.raises(RuntimeError):
        with ws.frame(3):
            raise RuntimeError
    assert ws.live == 0 and ws.peak == 3


def test_reserve_counts_against_budget():
    ws = Workspace(5)
    ws.alloc()
    ws.reserve(4)
    with pytest.raises(BudgetExceeded):
        ws.reserve(1)
    ws.unreserve(4)
    assert ws.live == 1 and ws.peak == 5
    with pytest.raises(DoubleFree):
        ws.unreserve(1)


def test_alloc_many_checks_budget_up_front():
    ws = Workspace(3)
    with pytest.raises(BudgetExceeded):
        ws.alloc_many(4)
    assert ws.live == 0


def test_stream_order_and_count():
    stream, out = collecting_stream()
    stream.emit("e1")
    stream.emit("e2")
    assert stream.emitted == 2 and out == ["e1", "e2"]


def test_stream_zero_and_many():
    assert OutputStream().emitted == 0
    stream, out = collecting_stream()
    for k in range(100):
        stream.emit(k)
    assert out == list(range(100))


def test_stream_has_no_read_path():
    stream = OutputStream()
    assert not any(hasattr(stream, name) for name in ("read", "records", "__iter__", "__getitem__"))


def test_step_counter_is_monotone():
    c = StepCounter()
    c.tick()
    c.tick(5)
    assert c.steps == 6
    with pytest.raises(ValueError):
        c.tick(-1)
