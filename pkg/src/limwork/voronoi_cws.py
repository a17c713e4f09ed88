"""Constant-workspace Voronoi and Delaunay edge enumeration.

One edge of a cell C(p) is found from a ray out of p with two passes over the
input: the first keeps the bisector B(p, q) that the ray crosses first, the
second trims that bisector by every other site.  Walking a cell repeats this
with the ray through the endpoint of the last edge found.

Parameters along a bisector are kept as integer pairs ``(num, den)`` with
``den > 0``; see :func:`limwork.edges.edge_from_interval` for the frame.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Callable, NamedTuple

from .edges import DelaunayEdge, VoronoiEdge, edge_from_interval
from ._kernels import kernels
from .exact import GeneralPositionViolation, PointSet, Ray, as_pointset
from .workspace import AlgebraicPoint, InputRef, OutputStream, StepCounter, Workspace

# cells reserved by each routine; identical for every n
SCAN_CELLS = 6
FIND_EDGE_CELLS = 9
WALK_CELLS = 9
SUCCESSOR_CELLS = 7
ENUMERATE_CELLS = 2

DEFAULT_BUDGET = 64

CCW = 1
CW = -1


class RayMissesBoundary(RuntimeError):
    pass


class NotADelaunayEdge(ValueError):
    pass


class CellEdge(NamedTuple):
    """An edge of C(p) on B(p, q), in p's frame."""

    p: int
    q: int
    lo: tuple[int, int] | None
    hi: tuple[int, int] | None
    lo_site: int
    hi_site: int


# -- the two scans -----------------------------------------------------------


def first_bisector(xs, ys, p: int, dx: int, dy: int, sense: int = CCW) -> int:
    """Site q whose bisector with p is crossed first by the ray p + t*(dx, dy).

    The crossing parameter for site k is ``|k - p|^2 / (2 (k - p).d)``.  When
    the ray passes through a Voronoi vertex two bisectors tie; the one whose
    cell edge lies on the ``sense`` side of the ray (CCW or CW) wins, which is
    the bisector a slightly rotated ray would meet first.
    """
    px, py = xs[p], ys[p]
    best = -1
    bnum = bdot = bcross = 0
    ties = 0
    for k in range(len(xs)):
        if k == p:
            continue
        kx = xs[k] - px
        ky = ys[k] - py
        dot = kx * dx + ky * dy
        if dot <= 0:
            continue
        num = kx * kx + ky * ky
        if best < 0:
            best, bnum, bdot = k, num, dot
            bcross = dx * ky - dy * kx
            ties = 1
            continue
        lhs = num * bdot
        rhs = bnum * dot
        if lhs < rhs:
            best, bnum, bdot = k, num, dot
            bcross = dx * ky - dy * kx
            ties = 1
        elif lhs == rhs:
            ties += 1
            cross = dx * ky - dy * kx
            # larger cross/dot is hit first by a ray turned counterclockwise
            if sense * (cross * bdot - bcross * dot) > 0:
                best, bnum, bdot, bcross = k, num, dot, cross
    if best < 0:
        raise RayMissesBoundary(f"ray from site {p} crosses no bisector")
    if ties > 2:
        raise GeneralPositionViolation(
            "cocircular", (p, best), f"ray from site {p} meets a vertex of degree > 3"
        )
    return best


def clip_bisector(xs, ys, p: int, q: int):
    """Trim B(p, q) to the part not closer to any other site.

    Returns ``(lo, lo_site, hi, hi_site)``; a missing side has ``None`` and
    site ``-1``.  Returns None when nothing is left.  Every step intersects
    an interval with a half-line, so the candidate stays one connected piece.
    """
    px, py = xs[p], ys[p]
    qx = xs[q] - px
    qy = ys[q] - py
    wx, wy = -qy, qx
    lo_n = lo_d = hi_n = hi_d = 0
    lo_s = hi_s = -1
    lo_tie = hi_tie = -1
    for k in range(len(xs)):
        if k == p or k == q:
            continue
        kx = xs[k] - px
        ky = ys[k] - py
        # points of B(p, q) at parameter u are closer to k iff a*u > c
        a = 2 * (kx * wx + ky * wy)
        c = kx * kx + ky * ky - kx * qx - ky * qy
        if a > 0:
            if hi_s < 0:
                hi_n, hi_d, hi_s, hi_tie = c, a, k, -1
            else:
                lhs = c * hi_d
                rhs = hi_n * a
                if lhs < rhs:
                    hi_n, hi_d, hi_s, hi_tie = c, a, k, -1
                elif lhs == rhs:
                    hi_tie = k
        elif a < 0:
            c = -c
            a = -a
            if lo_s < 0:
                lo_n, lo_d, lo_s, lo_tie = c, a, k, -1
            else:
                lhs = c * lo_d
                rhs = lo_n * a
                if lhs > rhs:
                    lo_n, lo_d, lo_s, lo_tie = c, a, k, -1
                elif lhs == rhs:
                    lo_tie = k
        elif c < 0:
            # k lies strictly between p and q on their common line
            return None
    if lo_s >= 0 and hi_s >= 0 and lo_n * hi_d >= hi_n * lo_d:
        return None
    if lo_tie >= 0:
        raise GeneralPositionViolation("cocircular", (p, q, lo_s, lo_tie))
    if hi_tie >= 0:
        raise GeneralPositionViolation("cocircular", (p, q, hi_s, hi_tie))
    lo = (lo_n, lo_d) if lo_s >= 0 else None
    hi = (hi_n, hi_d) if hi_s >= 0 else None
    return lo, lo_s, hi, hi_s


def vertex_direction(xs, ys, p: int, q: int, u) -> tuple[int, int]:
    """Integer direction from site p to the point at parameter ``u`` on B(p, q)."""
    num, den = u
    qx = xs[q] - xs[p]
    qy = ys[q] - ys[p]
    return den * qx - 2 * num * qy, den * qy + 2 * num * qx


def vertex_point(xs, ys, p: int, q: int, u, third: int) -> AlgebraicPoint:
    dx, dy = vertex_direction(xs, ys, p, q, u)
    w = 2 * u[1]
    return AlgebraicPoint(w * xs[p] + dx, w * ys[p] + dy, w, (p, q, third))


# -- one edge per ray --------------------------------------------------------


def cell_edge(ps: PointSet, p: int, d: tuple[int, int], sense: int,
              ws: Workspace, counter: StepCounter) -> CellEdge:
    """Edge of C(p) whose closure meets the ray from p with direction ``d``."""
    xs, ys = ps.xs, ps.ys
    scan = 2 * (len(xs) - 1)
    with ws.frame(FIND_EDGE_CELLS) as cells:
        ws[cells[0]] = InputRef(p)
        q = first_bisector(xs, ys, p, d[0], d[1], sense)
        counter.steps += scan
        ws[cells[1]] = InputRef(q)
        clipped = clip_bisector(xs, ys, p, q)
        counter.steps += scan
        if clipped is None:
            raise RayMissesBoundary(f"bisector of {p} and {q} vanished after trimming")
        lo, lo_s, hi, hi_s = clipped
        if lo is not None:
            ws[cells[2]] = vertex_point(xs, ys, p, q, lo, lo_s)
        if hi is not None:
            ws[cells[3]] = vertex_point(xs, ys, p, q, hi, hi_s)
        return CellEdge(p, q, lo, hi, lo_s, hi_s)


def _integer_direction(ray: Ray, ps: PointSet, p: int) -> tuple[int, int]:
    site = ps[p]
    if (Fraction(ray.origin[0]), Fraction(ray.origin[1])) != (site.x, site.y):
        raise ValueError(f"ray must start at site {p}")
    dx, dy = Fraction(ray.direction[0]), Fraction(ray.direction[1])
    m = lcm(dx.denominator, dy.denominator)
    return int(dx * m), int(dy * m)


def find_cell_edge(pointset, p: int, ray, *, sense: int = CCW,
                   workspace: Workspace | None = None,
                   counter: StepCounter | None = None) -> VoronoiEdge:
    """Voronoi edge of site ``p`` whose closure meets ``ray``.

    ``ray`` is a :class:`~limwork.exact.Ray` starting at site ``p`` or the
    index of another site the ray passes through.
    """
    ps = as_pointset(pointset)
    if isinstance(ray, int):
        d = (ps.xs[ray] - ps.xs[p], ps.ys[ray] - ps.ys[p])
    else:
        d = _integer_direction(ray, ps, p)
    ws = workspace if workspace is not None else Workspace(DEFAULT_BUDGET)
    counter = counter if counter is not None else StepCounter()
    e = cell_edge(ps, p, d, sense, ws, counter)
    return edge_from_interval(ps, e.p, e.q, e.lo, e.hi)


# -- walking a cell ----------------------------------------------------------


def starter_site(p: int) -> int:
    """Lowest-index site other than p; the first ray of a walk goes through it."""
    return 1 if p == 0 else 0


def walk_cell(ps: PointSet, p: int, visit: Callable[[CellEdge], None],
              ws: Workspace, counter: StepCounter) -> None:
    """Call ``visit`` once for every edge of C(p).

    Counterclockwise from the starter edge until the walk closes or hits an
    unbounded edge; in the latter case clockwise from the starter edge's
    other endpoint.
    """
    xs, ys = ps.xs, ps.ys
    with ws.frame(WALK_CELLS) as cells:
        ws[cells[0]] = InputRef(p)
        s = starter_site(p)
        ws[cells[1]] = InputRef(s)
        first = cell_edge(ps, p, (xs[s] - xs[p], ys[s] - ys[p]), CCW, ws, counter)
        ws[cells[2]] = InputRef(first.q)
        if first.lo is None and first.hi is None and len(xs) > 2:
            k = next(k for k in range(len(xs)) if k not in (p, first.q))
            raise GeneralPositionViolation("collinear", (p, first.q, k))
        visit(first)
        cur = first
        while cur.hi is not None:
            ws[cells[3]] = vertex_point(xs, ys, p, cur.q, cur.hi, cur.hi_site)
            nxt = cell_edge(ps, p, vertex_direction(xs, ys, p, cur.q, cur.hi),
                            CCW, ws, counter)
            if nxt.q != cur.hi_site:
                raise RuntimeError(f"walk around site {p} skipped a vertex")
            if nxt.q == first.q:
                return
            visit(nxt)
            cur = nxt
        cur = first
        while cur.lo is not None:
            ws[cells[3]] = vertex_point(xs, ys, p, cur.q, cur.lo, cur.lo_site)
            nxt = cell_edge(ps, p, vertex_direction(xs, ys, p, cur.q, cur.lo),
                            CW, ws, counter)
            if nxt.q != cur.lo_site or nxt.q == first.q:
                raise RuntimeError(f"walk around site {p} skipped a vertex")
            visit(nxt)
            cur = nxt


def _prepare(pointset, workspace, counter):
    ps = as_pointset(pointset)
    if len(ps) < 2:
        raise ValueError("need at least two sites")
    ps.require_distinct()
    ws = workspace if workspace is not None else Workspace(DEFAULT_BUDGET)
    counter = counter if counter is not None else StepCounter()
    return ps, ws, counter


def enumerate_voronoi_edges(pointset, stream: OutputStream, *,
                            workspace: Workspace | None = None,
                            counter: StepCounter | None = None) -> None:
    """Emit every Voronoi edge once, as :class:`VoronoiEdge` records."""
    ps, ws, counter = _prepare(pointset, workspace, counter)

    def visit(e: CellEdge):
        # each edge is met from both cells; report it from the smaller index
        if e.p < e.q:
            stream.emit(edge_from_interval(ps, e.p, e.q, e.lo, e.hi))

    with ws.frame(ENUMERATE_CELLS) as cells:
        for p in range(len(ps)):
            ws[cells[0]] = InputRef(p)
            walk_cell(ps, p, visit, ws, counter)


def enumerate_delaunay_edges(pointset, stream: OutputStream, *,
                             workspace: Workspace | None = None,
                             counter: StepCounter | None = None) -> None:
    """Emit every Delaunay edge once, as :class:`DelaunayEdge` records."""
    ps, ws, counter = _prepare(pointset, workspace, counter)

    def visit(e: CellEdge):
        if e.p < e.q:
            stream.emit(DelaunayEdge(e.p, e.q))

    with ws.frame(ENUMERATE_CELLS) as cells:
        for p in range(len(ps)):
            ws[cells[0]] = InputRef(p)
            walk_cell(ps, p, visit, ws, counter)


# -- clockwise successor -----------------------------------------------------


def cw_successor(ps: PointSet, p: int, q: int, ws: Workspace,
                 counter: StepCounter, *, compiled: bool = True) -> int:
    """Delaunay neighbor of p that follows q in clockwise order around p.

    Moving clockwise around p means moving to the low end of the Voronoi edge
    on B(p, q); the site that bounds that end is the answer.  When that end
    is unbounded, q is the clockwise-most neighbor and the order wraps to the
    counterclockwise-most one: the hull neighbor with every site on its right.
    """
    xs, ys = ps.xs, ps.ys
    n = len(xs)
    fast = ps.fast_arrays() if compiled else None
    with ws.frame(SUCCESSOR_CELLS) as cells:
        ws[cells[0]] = InputRef(p)
        ws[cells[1]] = InputRef(q)
        counter.steps += 2 * (n - 1)
        if fast is not None:
            clip_low_end, ccw_most = kernels()
            ok, lo_n, lo_d, lo_s, lo_tie, hi_s, hi_tie = clip_low_end(fast[0], fast[1], p, q)
            if not ok:
                raise NotADelaunayEdge(f"({p}, {q}) is not a Delaunay edge")
            if lo_tie >= 0:
                raise GeneralPositionViolation("cocircular", (p, q, lo_s, lo_tie))
            if hi_tie >= 0:
                raise GeneralPositionViolation("cocircular", (p, q, hi_s, hi_tie))
            lo = (int(lo_n), int(lo_d)) if lo_s >= 0 else None
        else:
            clipped = clip_bisector(xs, ys, p, q)
            if clipped is None:
                raise NotADelaunayEdge(f"({p}, {q}) is not a Delaunay edge")
            lo, lo_s = clipped[0], clipped[1]
        if lo is not None:
            ws[cells[2]] = vertex_point(xs, ys, p, q, lo, lo_s)
            return lo_s
        counter.steps += 2 * (n - 1)
        if fast is not None:
            r = int(ccw_most(fast[0], fast[1], p, q))
        else:
            px, py = xs[p], ys[p]
            r = q
            rx, ry = xs[r] - px, ys[r] - py
            for k in range(n):
                if k == p:
                    continue
                kx = xs[k] - px
                ky = ys[k] - py
                if rx * ky - ry * kx > 0:
                    r, rx, ry = k, kx, ky
        ws[cells[3]] = InputRef(r)
        return r


def clockwise_next_delaunay_edge(pointset, p: int, q: int, *,
                                 workspace: Workspace | None = None,
                                 counter: StepCounter | None = None) -> int:
    ps = as_pointset(pointset)
    ws = workspace if workspace is not None else Workspace(DEFAULT_BUDGET)
    counter = counter if counter is not None else StepCounter()
    return cw_successor(ps, p, q, ws, counter)
