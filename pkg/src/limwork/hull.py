"""Gift-wrapping convex hull in constant workspace."""

from __future__ import annotations

from .edges import HullEdge
from .exact import as_pointset
from .workspace import InputRef, OutputStream, StepCounter, Workspace

HULL_CELLS = 5
DEFAULT_BUDGET = 16


def gift_wrap_hull(pointset, stream: OutputStream, *,
                   workspace: Workspace | None = None,
                   counter: StepCounter | None = None) -> None:
    """Emit the directed hull edges counterclockwise from the lexicographic minimum.

    Points on the relative interior of a hull edge are skipped: among
    collinear candidates the farthest one wins.  A single point has no edges;
    two points give the two directed edges between them.
    """
    ps = as_pointset(pointset)
    n = len(ps)
    if n == 0:
        raise ValueError("empty point set")
    ps.require_distinct()
    ws = workspace if workspace is not None else Workspace(DEFAULT_BUDGET)
    counter = counter if counter is not None else StepCounter()
    xs, ys = ps.xs, ps.ys
    with ws.frame(HULL_CELLS) as cells:
        start = 0
        for k in range(1, n):
            if (xs[k], ys[k]) < (xs[start], ys[start]):
                start = k
        counter.steps += 2 * (n - 1)
        ws[cells[0]] = InputRef(start)
        if n == 1:
            return
        cur = start
        while True:
            ws[cells[1]] = InputRef(cur)
            cx, cy = xs[cur], ys[cur]
            nxt = 0 if cur != 0 else 1
            nx, ny = xs[nxt] - cx, ys[nxt] - cy
            for k in range(n):
                if k == cur or k == nxt:
                    continue
                kx = xs[k] - cx
                ky = ys[k] - cy
                turn = nx * ky - ny * kx
                # k to the right of cur->nxt, or further along the same line
                if turn < 0 or (turn == 0 and kx * kx + ky * ky > nx * nx + ny * ny):
                    nxt, nx, ny = k, kx, ky
            counter.steps += 2 * (n - 1)
            ws[cells[2]] = InputRef(nxt)
            stream.emit(HullEdge(cur, nxt))
            if nxt == start:
                return
            cur = nxt


def hull_vertices(edges) -> list[int]:
    """Vertex sequence from the emitted hull edges (for callers outside the model)."""
    return [e.i for e in edges]
