"""Constant-workspace Euclidean minimum spanning tree.

A Delaunay edge pq is in the EMST iff p and q are not joined by a path of
strictly shorter Delaunay edges.  The test walks the boundary of the face of
the short-edge subgraph that pq cuts through, using only the clockwise
successor around a site, until pq turns up again.
"""

from __future__ import annotations

from .edges import DelaunayEdge
from .exact import GeneralPositionViolation, PointSet, as_pointset
from .voronoi_cws import CellEdge, DEFAULT_BUDGET, cw_successor, walk_cell
from .workspace import BoundedInt, InputRef, OutputStream, StepCounter, Workspace

FACE_WALK_CELLS = 7
DRIVER_CELLS = 3


class FaceWalkOverrun(RuntimeError):
    """The face walk ran past 2n steps; a predicate or successor is broken."""


def _d2(xs, ys, a, b):
    dx = xs[a] - xs[b]
    dy = ys[a] - ys[b]
    return dx * dx + dy * dy


def face_walk(ps: PointSet, p: int, q: int, ws: Workspace,
              counter: StepCounter) -> tuple[bool, int]:
    """Decide whether pq is an EMST edge; also return the number of walk steps.

    One step moves along one edge shorter than pq.  At each site the next edge
    is found by turning clockwise from the edge we arrived on, skipping edges
    that are too long.  Meeting pq while turning around q means p and q are
    connected by shorter edges; meeting it while turning around p means they
    are not.  Returning to p without seeing pq is not decisive, so the walk
    goes on.
    """
    xs, ys = ps.xs, ps.ys
    n = len(xs)
    limit = _d2(xs, ys, p, q)
    with ws.frame(FACE_WALK_CELLS) as cells:
        ws[cells[0]] = InputRef(p)
        ws[cells[1]] = InputRef(q)
        ws[cells[2]] = BoundedInt(limit)
        at, came_from = p, q
        steps = 0
        while True:
            r = came_from
            while True:
                r = cw_successor(ps, at, r, ws, counter)
                if r == q and at == p:
                    return True, steps
                if r == p and at == q:
                    return False, steps
                d2 = _d2(xs, ys, at, r)
                counter.steps += 1
                if d2 == limit:
                    raise GeneralPositionViolation("equal-length", ((p, q), (at, r)))
                if d2 < limit:
                    break
            steps += 1
            if steps > 2 * n:
                raise FaceWalkOverrun(f"walk for edge ({p}, {q}) exceeded {2 * n} steps")
            came_from, at = at, r
            ws[cells[3]] = InputRef(at)
            ws[cells[4]] = InputRef(came_from)
            ws[cells[5]] = BoundedInt(steps)


def is_emst_edge(pointset, p: int, q: int, *, workspace: Workspace | None = None,
                 counter: StepCounter | None = None) -> bool:
    ps = as_pointset(pointset)
    ws = workspace if workspace is not None else Workspace(DEFAULT_BUDGET)
    counter = counter if counter is not None else StepCounter()
    return face_walk(ps, p, q, ws, counter)[0]


def enumerate_emst(pointset, stream: OutputStream, *,
                   workspace: Workspace | None = None,
                   counter: StepCounter | None = None,
                   walk_log: list | None = None) -> None:
    """Emit the EMST edges as :class:`DelaunayEdge` records.

    Delaunay edges come from the constant-workspace cell walks; each new one
    pauses the walk for a membership test.  Output follows the Delaunay
    enumeration, not edge length.  ``walk_log`` (optional, outside the model)
    receives ``(p, q, steps)`` per tested edge.
    """
    ps = as_pointset(pointset)
    if len(ps) < 2:
        raise ValueError("need at least two sites")
    ps.require_distinct()
    ws = workspace if workspace is not None else Workspace(DEFAULT_BUDGET)
    counter = counter if counter is not None else StepCounter()

    def visit(e: CellEdge):
        if e.p < e.q:
            ws[cells[1]] = InputRef(e.q)
            inside, steps = face_walk(ps, e.p, e.q, ws, counter)
            if walk_log is not None:
                walk_log.append((e.p, e.q, steps))
            if inside:
                stream.emit(DelaunayEdge(e.p, e.q))

    with ws.frame(DRIVER_CELLS) as cells:
        for p in range(len(ps)):
            ws[cells[0]] = InputRef(p)
            walk_cell(ps, p, visit, ws, counter)
