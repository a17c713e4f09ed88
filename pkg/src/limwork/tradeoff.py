"""Voronoi edge enumeration with O(s) cells in O((n^2/s) log s) time.

The workspace holds a set V of up to s sites whose cells are walked in
lockstep.  One round advances every walk by one edge with
:func:`batch_find_edges`, which makes two passes over the input in batches
of s consecutive sites and answers all ray queries of V against the small
diagram of V plus the batch.

Walks that finish are replaced by the next unread site.  When no unread
site is left the residual set V_R is handled at once: its own diagram gives
candidate edges, which are trimmed against every batch, and those not
already reported by a walk are emitted.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .edges import VoronoiEdge, edge_from_interval
from .exact import GeneralPositionViolation, PointSet, as_pointset
from .smalldiagram import SmallDiagram
from .voronoi_cws import (
    CCW,
    CW,
    CellEdge,
    RayMissesBoundary,
    _integer_direction,
    starter_site,
    vertex_direction,
    vertex_point,
)
from .workspace import (
    AlgebraicPoint,
    BoundedInt,
    InputRef,
    OutputStream,
    StepCounter,
    Workspace,
)

# cells per ray query while a batch round runs: the leading site and its tie,
# the two trimmed ends and their ties
QUERY_CELLS = 6
# cells per walk in V: site, phase, sense, first neighbor, restart vertex,
# start ray, current ray and one spare for the last edge's other site
WALK_STATE_CELLS = 8
# cells per candidate edge of the residual diagram: the two sites, two ends
CANDIDATE_CELLS = 4
DRIVER_CELLS = 4

# the trade-off algorithm runs in a workspace of SPACE_CONSTANT * s cells
SPACE_CONSTANT = 64


def budget_for(s: int) -> int:
    return SPACE_CONSTANT * s


def small_voronoi(pointset, sites: Sequence[int], workspace: Workspace,
                  counter: StepCounter | None = None) -> SmallDiagram:
    """Diagram of the given sites, charged to ``workspace``.

    Release it with ``with`` or :meth:`SmallDiagram.release`.
    """
    ps = as_pointset(pointset)
    return SmallDiagram(ps, sites, workspace,
                        counter if counter is not None else StepCounter())


def diagram_edges(pointset, diagram: SmallDiagram) -> list[VoronoiEdge]:
    """Voronoi edges of a small diagram, each trimmed by its sites' neighbors."""
    ps = as_pointset(pointset)
    out = []
    for a, b in diagram.delaunay_edges():
        clip = _Clip()
        clip.update(ps.xs, ps.ys, a, b, diagram.neighbors[a])
        lo, hi = clip.result(a, b)
        out.append(edge_from_interval(ps, a, b, lo, hi))
    return sorted(out)


# -- incremental scans -------------------------------------------------------


class _FirstHit:
    """Running minimum of the ray crossing over site subsets that may overlap.

    Same order and tie-break as ``voronoi_cws.first_bisector``; a site seen
    again in a later batch is not a new tie.
    """

    __slots__ = ("best", "num", "dot", "cross", "tie", "triple")

    def __init__(self):
        self.best = -1
        self.num = self.dot = self.cross = 0
        self.tie = -1
        self.triple = -1

    def update(self, xs, ys, p, dx, dy, sense, candidates) -> int:
        px, py = xs[p], ys[p]
        reads = 0
        for k in candidates:
            reads += 1
            if k == self.best or k == self.tie:
                continue
            kx = xs[k] - px
            ky = ys[k] - py
            dot = kx * dx + ky * dy
            if dot <= 0:
                continue
            num = kx * kx + ky * ky
            cross = dx * ky - dy * kx
            if self.best < 0:
                self.best, self.num, self.dot, self.cross = k, num, dot, cross
                continue
            lhs = num * self.dot
            rhs = self.num * dot
            if lhs < rhs:
                self.best, self.num, self.dot, self.cross = k, num, dot, cross
                self.tie = self.triple = -1
            elif lhs == rhs:
                if self.tie >= 0:
                    self.triple = k
                if sense * (cross * self.dot - self.cross * dot) > 0:
                    self.tie = self.best
                    self.best, self.num, self.dot, self.cross = k, num, dot, cross
                elif self.tie < 0:
                    self.tie = k
        return reads

    def result(self, p) -> int:
        if self.best < 0:
            raise RayMissesBoundary(f"ray from site {p} crosses no bisector")
        if self.triple >= 0:
            raise GeneralPositionViolation(
                "cocircular", (p, self.best, self.tie, self.triple),
                f"ray from site {p} meets a vertex of degree > 3")
        return self.best


class _Clip:
    """Running trim of B(p, q); same frame as ``voronoi_cws.clip_bisector``."""

    __slots__ = ("lo_n", "lo_d", "lo_s", "lo_tie", "hi_n", "hi_d", "hi_s",
                 "hi_tie", "empty")

    def __init__(self):
        self.lo_n = self.hi_n = 0
        self.lo_d = self.hi_d = 1
        self.lo_s = self.hi_s = self.lo_tie = self.hi_tie = -1
        self.empty = False

    def update(self, xs, ys, p, q, candidates) -> int:
        px, py = xs[p], ys[p]
        qx = xs[q] - px
        qy = ys[q] - py
        wx, wy = -qy, qx
        reads = 0
        for k in candidates:
            reads += 1
            if k == q or k == p:
                continue
            kx = xs[k] - px
            ky = ys[k] - py
            a = 2 * (kx * wx + ky * wy)
            c = kx * kx + ky * ky - kx * qx - ky * qy
            if a > 0:
                if k == self.hi_s:
                    continue
                if self.hi_s < 0:
                    self.hi_n, self.hi_d, self.hi_s, self.hi_tie = c, a, k, -1
                else:
                    lhs = c * self.hi_d
                    rhs = self.hi_n * a
                    if lhs < rhs:
                        self.hi_n, self.hi_d, self.hi_s, self.hi_tie = c, a, k, -1
                    elif lhs == rhs:
                        self.hi_tie = k
            elif a < 0:
                if k == self.lo_s:
                    continue
                c = -c
                a = -a
                if self.lo_s < 0:
                    self.lo_n, self.lo_d, self.lo_s, self.lo_tie = c, a, k, -1
                else:
                    lhs = c * self.lo_d
                    rhs = self.lo_n * a
                    if lhs > rhs:
                        self.lo_n, self.lo_d, self.lo_s, self.lo_tie = c, a, k, -1
                    elif lhs == rhs:
                        self.lo_tie = k
            elif c < 0:
                self.empty = True
        if (self.lo_s >= 0 and self.hi_s >= 0
                and self.lo_n * self.hi_d >= self.hi_n * self.lo_d):
            self.empty = True
        return reads

    def result(self, p, q):
        """``(lo, hi)`` parameters, or None if nothing is left."""
        if self.empty:
            return None
        if self.lo_tie >= 0:
            raise GeneralPositionViolation("cocircular", (p, q, self.lo_s, self.lo_tie))
        if self.hi_tie >= 0:
            raise GeneralPositionViolation("cocircular", (p, q, self.hi_s, self.hi_tie))
        lo = (self.lo_n, self.lo_d) if self.lo_s >= 0 else None
        hi = (self.hi_n, self.hi_d) if self.hi_s >= 0 else None
        return lo, hi


def _batches(n: int, s: int) -> list[range]:
    return [range(start, min(n, start + s)) for start in range(0, n, s)]


# -- batched ray queries -----------------------------------------------------


class RayQuery(NamedTuple):
    """Ray from site ``p`` with integer direction ``d`` (scaled frame)."""

    p: int
    d: tuple[int, int]
    sense: int = CCW


def batch_cell_edges(ps: PointSet, queries: Sequence[RayQuery], s: int,
                     ws: Workspace, counter: StepCounter) -> list[CellEdge]:
    """For each query, the edge of C(p) crossed by its ray.

    Pass one finds the bisector each ray meets first; pass two trims it by
    the cell of p in every batch diagram.  Each batch diagram holds the query
    sites and one batch of s consecutive sites.
    """
    xs, ys = ps.xs, ps.ys
    n = len(xs)
    m = len(queries)
    if m > s:
        raise ValueError(f"{m} queries for a batch size of {s}")
    sites = [qr.p for qr in queries]
    in_v = set(sites)
    reserved = ws.alloc_many(QUERY_CELLS * m)
    try:
        hits = [_FirstHit() for _ in range(m)]
        for batch in _batches(n, s):
            with SmallDiagram(ps, in_v.union(batch), ws, counter) as diag:
                nbrs = diag.neighbors
                for h, (p, d, sense) in zip(hits, queries):
                    counter.steps += h.update(xs, ys, p, d[0], d[1], sense, nbrs[p])
        best = []
        for h, qr, base in zip(hits, queries, range(0, QUERY_CELLS * m, QUERY_CELLS)):
            q = h.result(qr.p)
            ws[reserved[base]] = InputRef(q)
            best.append(q)

        clips = [_Clip() for _ in range(m)]
        for batch in _batches(n, s):
            with SmallDiagram(ps, in_v.union(batch), ws, counter) as diag:
                nbrs = diag.neighbors
                for c, p, q in zip(clips, sites, best):
                    counter.steps += c.update(xs, ys, p, q, nbrs[p])

        out = []
        for c, p, q, base in zip(clips, sites, best, range(0, QUERY_CELLS * m, QUERY_CELLS)):
            r = c.result(p, q)
            if r is None:
                raise RayMissesBoundary(f"bisector of {p} and {q} vanished after trimming")
            lo, hi = r
            if lo is not None:
                ws[reserved[base + 2]] = vertex_point(xs, ys, p, q, lo, c.lo_s)
            if hi is not None:
                ws[reserved[base + 3]] = vertex_point(xs, ys, p, q, hi, c.hi_s)
            out.append(CellEdge(p, q, lo, hi, c.lo_s, c.hi_s))
        return out
    finally:
        ws.free_many(reserved)


def batch_find_edges(pointset, queries, s: int | None = None, *,
                     workspace: Workspace | None = None,
                     counter: StepCounter | None = None) -> list[VoronoiEdge]:
    """Voronoi edge of C(p) crossed by each ray, for up to ``s`` rays at once.

    ``queries`` holds ``(p, ray)`` or ``(p, ray, sense)`` tuples; ``ray`` is a
    :class:`~limwork.exact.Ray` from site ``p`` or the index of a site it
    passes through.  ``s`` defaults to the number of queries.
    """
    ps = as_pointset(pointset)
    ps.require_distinct()
    norm = []
    for qr in queries:
        p, ray = qr[0], qr[1]
        sense = qr[2] if len(qr) > 2 else CCW
        if isinstance(ray, int):
            d = (ps.xs[ray] - ps.xs[p], ps.ys[ray] - ps.ys[p])
        else:
            d = _integer_direction(ray, ps, p)
        norm.append(RayQuery(p, d, sense))
    s = max(1, len(norm)) if s is None else s
    ws = workspace if workspace is not None else Workspace(budget_for(s))
    counter = counter if counter is not None else StepCounter()
    found = batch_cell_edges(ps, norm, s, ws, counter)
    return [edge_from_interval(ps, e.p, e.q, e.lo, e.hi) for e in found]


# -- angular bookkeeping -----------------------------------------------------


def _ccw_before(ref, u, v) -> bool:
    """Whether u comes strictly before v turning counterclockwise from ref."""

    def half(x):
        c = ref[0] * x[1] - ref[1] * x[0]
        return 0 if c > 0 or (c == 0 and ref[0] * x[0] + ref[1] * x[1] > 0) else 1

    hu, hv = half(u), half(v)
    if hu != hv:
        return hu < hv
    return u[0] * v[1] - u[1] * v[0] > 0


def strictly_between(a, x, b) -> bool:
    """Whether direction x lies in the open counterclockwise sweep from a to b."""
    if a[0] * x[1] - a[1] * x[0] == 0 and a[0] * x[0] + a[1] * x[1] > 0:
        return False
    return _ccw_before(a, x, b)


def _representative(xs, ys, p, q, lo, hi) -> tuple[int, int, int]:
    """Homogeneous point inside the edge on B(p, q) with ends ``lo``/``hi``."""
    if lo is not None and hi is not None:
        u = (lo[0] * hi[1] + hi[0] * lo[1], 2 * lo[1] * hi[1])
    elif lo is not None:
        u = (lo[0] + lo[1], lo[1])
    elif hi is not None:
        u = (hi[0] - hi[1], hi[1])
    else:
        u = (0, 1)
    px, py, qx, qy = xs[p], ys[p], xs[q], ys[q]
    num, den = u
    return (den * (px + qx) + 2 * num * (py - qy),
            den * (py + qy) + 2 * num * (qx - px),
            2 * den)


START, SWEEP_CCW, SWEEP_CW, DONE = range(4)


class CellWalkState:
    """Progress of one cell walk inside V.

    The region of C(p) already reported lies between the start ray and the
    current ray: counterclockwise from start to current while walking
    counterclockwise (plus the whole first edge), and from current to start
    while walking clockwise, where the start ray then follows the
    counterclockwise unbounded edge.
    """

    __slots__ = ("p", "phase", "sense", "q0", "restart", "start", "ray", "cells")

    def __init__(self, ps: PointSet, p: int, ws: Workspace):
        self.p = p
        self.cells = ws.alloc_many(WALK_STATE_CELLS)
        s = starter_site(p)
        self.phase = START
        self.sense = CCW
        self.q0 = -1
        self.restart = None
        self.start = AlgebraicPoint(ps.xs[s], ps.ys[s], 1, (s,))
        self.ray = self.start
        ws[self.cells[0]] = InputRef(p)
        self._sync(ws)

    def _sync(self, ws):
        ws[self.cells[1]] = BoundedInt(self.phase)
        ws[self.cells[2]] = BoundedInt(self.sense)
        if self.q0 >= 0:
            ws[self.cells[3]] = InputRef(self.q0)
        if self.restart is not None:
            ws[self.cells[4]] = self.restart
        ws[self.cells[5]] = self.start
        ws[self.cells[6]] = self.ray

    def release(self, ws):
        ws.free_many(self.cells)

    def _dir(self, ps, pt):
        return (pt.x - pt.w * ps.xs[self.p], pt.y - pt.w * ps.ys[self.p])

    def query(self, ps) -> RayQuery:
        return RayQuery(self.p, self._dir(ps, self.ray), self.sense)

    def swept(self, ps, other: int, rep) -> bool:
        """Whether the edge shared with ``other`` through ``rep`` is already reported."""
        if self.phase == DONE:
            return True
        if self.phase == START:
            return False
        if self.phase == SWEEP_CCW and other == self.q0:
            return True
        x, y, w = rep
        r = (x - w * ps.xs[self.p], y - w * ps.ys[self.p])
        a = self._dir(ps, self.start)
        b = self._dir(ps, self.ray)
        if self.phase == SWEEP_CCW:
            return strictly_between(a, r, b)
        return strictly_between(b, r, a)

    def _escape(self, ps, q) -> AlgebraicPoint:
        xs, ys, p = ps.xs, ps.ys, self.p
        return AlgebraicPoint(xs[p] + ys[p] - ys[q], ys[p] + xs[q] - xs[p], 1, (p, q))

    def advance(self, ps, e: CellEdge, ws) -> bool:
        """Record edge ``e``; returns whether it is new for this walk."""
        xs, ys, p = ps.xs, ps.ys, self.p
        new = True
        if self.phase == START:
            self.q0 = e.q
            if e.lo is not None:
                self.restart = vertex_point(xs, ys, p, e.q, e.lo, e.lo_site)
            if e.hi is not None:
                self.phase = SWEEP_CCW
                self.ray = vertex_point(xs, ys, p, e.q, e.hi, e.hi_site)
            elif e.lo is not None:
                self._to_cw(ps, e.q)
            else:
                if len(xs) > 2:
                    k = next(k for k in range(len(xs)) if k not in (p, e.q))
                    raise GeneralPositionViolation("collinear", (p, e.q, k))
                self.phase = DONE
        elif self.phase == SWEEP_CCW:
            if e.q == self.q0:
                self.phase = DONE
                new = False
            elif e.hi is not None:
                self.ray = vertex_point(xs, ys, p, e.q, e.hi, e.hi_site)
            elif self.restart is not None:
                self._to_cw(ps, e.q)
            else:
                self.phase = DONE
        elif self.phase == SWEEP_CW:
            if e.q == self.q0:
                raise RuntimeError(f"walk around site {p} skipped a vertex")
            if e.lo is not None:
                self.ray = vertex_point(xs, ys, p, e.q, e.lo, e.lo_site)
            else:
                self.phase = DONE
        else:
            raise RuntimeError(f"walk around site {p} already finished")
        self._sync(ws)
        return new

    def _to_cw(self, ps, q):
        self.phase = SWEEP_CW
        self.sense = CW
        self.start = self._escape(ps, q)
        self.ray = self.restart


class BatchState:
    """The walks held in the workspace and the index of the last site read."""

    def __init__(self, ps: PointSet, s: int, ws: Workspace):
        self.ps = ps
        self.ws = ws
        self.walks: dict[int, CellWalkState] = {}
        self.watermark = -1
        for _ in range(min(s, len(ps))):
            self.admit()

    def admit(self) -> bool:
        """Start walking the next unread site, if there is one."""
        if self.watermark + 1 >= len(self.ps):
            return False
        self.watermark += 1
        self.walks[self.watermark] = CellWalkState(self.ps, self.watermark, self.ws)
        return True

    def retire(self, p: int):
        self.walks.pop(p).release(self.ws)

    def reported(self, p: int, other: int, rep) -> bool:
        """Whether the edge of C(p) shared with ``other`` was already emitted."""
        if p > self.watermark:
            return False
        walk = self.walks.get(p)
        if walk is None:
            return True
        return walk.swept(self.ps, other, rep)

    def active(self) -> list[CellWalkState]:
        return [self.walks[p] for p in sorted(self.walks)]


class CandidateEdgeList:
    """Edges of the residual diagram, trimmed batch by batch."""

    def __init__(self, ps: PointSet, diagram: SmallDiagram, ws: Workspace,
                 counter: StepCounter):
        self.ps = ps
        self.ws = ws
        self.pairs = diagram.delaunay_edges()
        self.cells = ws.alloc_many(CANDIDATE_CELLS * len(self.pairs))
        self.clips = []
        for base, (a, b) in zip(range(0, len(self.cells), CANDIDATE_CELLS), self.pairs):
            clip = _Clip()
            counter.steps += clip.update(ps.xs, ps.ys, a, b, diagram.neighbors[a])
            self.clips.append(clip)
            ws[self.cells[base]] = InputRef(a)
            ws[self.cells[base + 1]] = InputRef(b)

    def trim(self, diagram: SmallDiagram, counter: StepCounter):
        xs, ys = self.ps.xs, self.ps.ys
        for (a, b), clip in zip(self.pairs, self.clips):
            if clip.empty:
                continue
            nbrs = diagram.neighbors[a]
            counter.steps += 1
            if b not in nbrs:
                clip.empty = True
                continue
            counter.steps += clip.update(xs, ys, a, b, nbrs)

    def survivors(self):
        for (a, b), clip in zip(self.pairs, self.clips):
            r = clip.result(a, b)
            if r is not None:
                yield a, b, r[0], r[1]

    def release(self):
        self.ws.free_many(self.cells)
        self.cells = []


# -- driver ------------------------------------------------------------------


def tradeoff_voronoi(pointset, s: int, stream: OutputStream, *,
                     workspace: Workspace | None = None,
                     counter: StepCounter | None = None) -> None:
    """Emit every Voronoi edge exactly once using O(s) workspace cells."""
    ps = as_pointset(pointset)
    n = len(ps)
    if n < 2:
        raise ValueError("need at least two sites")
    if not 1 <= s <= n:
        raise ValueError(f"s must be in [1, {n}], got {s}")
    ps.require_distinct()
    ws = workspace if workspace is not None else Workspace(budget_for(s))
    counter = counter if counter is not None else StepCounter()
    xs, ys = ps.xs, ps.ys

    with ws.frame(DRIVER_CELLS) as cells:
        state = BatchState(ps, s, ws)
        ws[cells[0]] = BoundedInt(s)

        # phase 1: walk V in lockstep, refilling it from the unread sites
        exhausted = False
        while state.walks and not exhausted:
            walks = state.active()
            found = batch_cell_edges(ps, [w.query(ps) for w in walks], s, ws, counter)
            for walk, e in zip(walks, found):
                p, q = walk.p, e.q
                ws[cells[1]] = InputRef(p)
                ws[cells[2]] = InputRef(q)
                if walk.phase == SWEEP_CCW and q == walk.q0:
                    new = False
                else:
                    rep = _representative(xs, ys, p, q, e.lo, e.hi)
                    new = not state.reported(q, p, rep)
                if new:
                    stream.emit(edge_from_interval(ps, p, q, e.lo, e.hi))
                walk.advance(ps, e, ws)
                if walk.phase == DONE:
                    state.retire(p)
                    if not state.admit():
                        exhausted = True
            ws[cells[3]] = BoundedInt(state.watermark)

        # phase 2: the edges between unfinished sites, all at once
        residual = sorted(state.walks)
        if len(residual) >= 2:
            with SmallDiagram(ps, residual, ws, counter) as diag:
                cand = CandidateEdgeList(ps, diag, ws, counter)
            in_v = set(residual)
            try:
                for batch in _batches(n, s):
                    with SmallDiagram(ps, in_v.union(batch), ws, counter) as diag:
                        cand.trim(diag, counter)
                for a, b, lo, hi in cand.survivors():
                    rep = _representative(xs, ys, a, b, lo, hi)
                    if state.walks[a].swept(ps, b, rep) or state.walks[b].swept(ps, a, rep):
                        continue
                    stream.emit(edge_from_interval(ps, a, b, lo, hi))
            finally:
                cand.release()
        for p in list(state.walks):
            state.retire(p)
