"""Exact Delaunay triangulation of a small subset of sites, held in the workspace.

The trade-off algorithm repeatedly needs the diagram of at most 2s sites.  The
cell of a site in that diagram is the intersection of the half-planes of its
Delaunay neighbors, so the neighbor lists are all the queries use.

Construction is Bowyer-Watson with a ghost vertex for the outside.  Sites go
in lexicographic order, so each new site lies outside the current hull and
one of the ghost triangles at the previously inserted site is in conflict
with it, which makes point location O(1).
"""

from __future__ import annotations

from math import ceil, log2

import numpy as np

from ._kernels import delaunay_kernel
from .exact import GeneralPositionViolation
from .workspace import StepCounter, Workspace

GHOST = -1

# workspace charged per site of a small diagram: at most 2m triangles with
# three vertex references and three adjacency links each
CELLS_PER_SITE = 12


def construction_cost(m: int) -> int:
    """Declared step cost of building a diagram on m sites."""
    return m * max(1, ceil(log2(m))) if m > 1 else 1


_COST = [construction_cost(m) for m in range(64)]


def _orient(xs, ys, a, b, c) -> int:
    return (xs[b] - xs[a]) * (ys[c] - ys[a]) - (ys[b] - ys[a]) * (xs[c] - xs[a])


def _incircle(xs, ys, a, b, c, d) -> int:
    """Positive when d is inside the circle through the ccw triangle abc."""
    dx, dy = xs[d], ys[d]
    adx, ady = xs[a] - dx, ys[a] - dy
    bdx, bdy = xs[b] - dx, ys[b] - dy
    cdx, cdy = xs[c] - dx, ys[c] - dy
    return ((adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
            - (bdx * bdx + bdy * bdy) * (adx * cdy - cdx * ady)
            + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady))


def _four_sites(xs, ys, order) -> dict[int, list[int]]:
    """Closed form for four sites; ``order`` is lexicographic."""
    a = order[0]
    rest = list(order[1:])
    # ccw order around a, which is a hull vertex
    for i in range(2):
        for j in range(2 - i):
            if _orient(xs, ys, a, rest[j], rest[j + 1]) < 0:
                rest[j], rest[j + 1] = rest[j + 1], rest[j]
    b, c, d = rest
    for u, v, w in ((a, b, c), (a, c, d), (b, c, d), (a, b, d)):
        if _orient(xs, ys, u, v, w) == 0:
            raise GeneralPositionViolation("collinear", (u, v, w))
    if _orient(xs, ys, b, c, d) < 0:
        # c inside triangle abd
        return {a: [b, c, d], b: [a, c, d], c: [a, b, d], d: [a, b, c]}
    r = _incircle(xs, ys, a, b, c, d)
    if r == 0:
        raise GeneralPositionViolation("cocircular", (a, b, c, d))
    if r > 0:
        return {a: [b, d], b: [a, c, d], c: [b, d], d: [a, b, c]}
    return {a: [b, c, d], b: [a, c], c: [a, b, d], d: [a, c]}


def delaunay_neighbors(xs, ys, sites) -> dict[int, list[int]]:
    """Delaunay neighbors of every site in ``sites`` (indices into xs/ys)."""
    sites = set(sites)
    m = len(sites)
    if m <= 2:
        return {k: [j for j in sites if j != k] for k in sites}
    order = sorted(sites, key=lambda k: (xs[k], ys[k]))
    a, b, c = order[0], order[1], order[2]
    o = _orient(xs, ys, a, b, c)
    if o == 0:
        raise GeneralPositionViolation("collinear", (a, b, c))
    if m == 3:
        return {a: [b, c], b: [c, a], c: [a, b]}
    if m == 4:
        return _four_sites(xs, ys, order)
    if o < 0:
        b, c = c, b

    tris: dict[int, tuple[int, int, int]] = {}
    edge: dict[tuple[int, int], int] = {}
    next_id = 0

    def add(t):
        nonlocal next_id
        tid = next_id
        next_id += 1
        tris[tid] = t
        edge[(t[0], t[1])] = tid
        edge[(t[1], t[2])] = tid
        edge[(t[2], t[0])] = tid

    def remove(tid):
        t = tris.pop(tid)
        del edge[(t[0], t[1])]
        del edge[(t[1], t[2])]
        del edge[(t[2], t[0])]

    def conflict(t, x) -> bool:
        u, v, w = t
        if w == GHOST:
            o = _orient(xs, ys, u, v, x)
            if o == 0:
                raise GeneralPositionViolation("collinear", (u, v, x))
            return o > 0
        r = _incircle(xs, ys, u, v, w, x)
        if r == 0:
            raise GeneralPositionViolation("cocircular", (u, v, w, x))
        return r > 0

    add((a, b, c))
    add((b, a, GHOST))
    add((c, b, GHOST))
    add((a, c, GHOST))

    last = order[2]
    for x in order[3:]:
        start = -1
        for key in ((last, GHOST), (GHOST, last)):
            tid = edge[key]
            if conflict(tris[tid], x):
                start = tid
                break
        if start < 0:
            raise RuntimeError("no ghost triangle at the last site sees the new one")
        cavity = {start}
        checked = {start: True}
        stack = [start]
        boundary = []
        while stack:
            tid = stack.pop()
            t = tris[tid]
            for u, v in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
                nb = edge[(v, u)]
                seen = checked.get(nb)
                if seen is None:
                    seen = conflict(tris[nb], x)
                    checked[nb] = seen
                    if seen:
                        cavity.add(nb)
                        stack.append(nb)
                if not seen:
                    boundary.append((u, v))
        for tid in cavity:
            remove(tid)
        for u, v in boundary:
            if u == GHOST:
                add((v, x, GHOST))
            elif v == GHOST:
                add((x, u, GHOST))
            else:
                add((u, v, x))
        last = x

    nbrs: dict[int, list[int]] = {k: [] for k in order}
    for (u, v) in edge:
        if u != GHOST and v != GHOST:
            nbrs[u].append(v)
    return nbrs


_KINDS = {1: "collinear", 2: "cocircular"}


def _compiled_neighbors(fast, sites) -> dict[int, list[int]]:
    edges, info = delaunay_kernel()(fast[0], fast[1], np.array(sites, dtype=np.int64))
    status = int(info[0])
    if status:
        if status not in _KINDS:
            raise RuntimeError("no ghost triangle at the last site sees the new one")
        idx = tuple(int(v) for v in info[1:] if v >= 0)
        raise GeneralPositionViolation(_KINDS[status], idx)
    nbrs: dict[int, list[int]] = {k: [] for k in sites}
    for u, v in edges.tolist():
        nbrs[u].append(v)
        nbrs[v].append(u)
    return nbrs


class SmallDiagram:
    """Delaunay neighbor lists of a site subset, charged to a workspace.

    Use as a context manager; leaving the block releases the cells.
    """

    def __init__(self, ps, sites, ws: Workspace, counter: StepCounter):
        sites = set(sites)
        m = len(sites)
        self._ws = ws
        self._cells = ws.reserve(CELLS_PER_SITE * m)
        counter.steps += (_COST[m] if m < len(_COST) else construction_cost(m)) + m
        fast = ps.fast_arrays() if m > 4 else None
        if fast is not None:
            self.neighbors = _compiled_neighbors(fast, sorted(sites))
        else:
            self.neighbors = delaunay_neighbors(ps.xs, ps.ys, sites)

    @property
    def sites(self) -> list[int]:
        return sorted(self.neighbors)

    def release(self):
        if self._cells:
            self._ws.unreserve(self._cells)
            self._cells = 0

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.release()
        return False

    def delaunay_edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, vs in self.neighbors.items() for v in vs if u < v)
