"""Full-memory reference constructions used as ground truth.

These ignore the workspace model and favor obviously-correct code over speed:
every bisector is clipped against every other site via exact circumcenters,
the EMST is Kruskal over all pairs, the hull is a monotone chain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .edges import DelaunayEdge, VoronoiEdge, _primitive_dir
from .exact import GeneralPositionViolation, as_pointset


class TieDetected(ValueError):
    pass


@dataclass
class OracleDiagram:
    vertices: set
    edges: list[VoronoiEdge]
    cells: dict[int, list[VoronoiEdge]] = field(default_factory=dict)

    def delaunay_edges(self) -> set[DelaunayEdge]:
        return {DelaunayEdge(e.i, e.j) for e in self.edges}


# sites tried first when clipping a bisector; exact either way, since extra
# constraints can only shrink the candidate interval
_PROBE_NEIGHBORS = 12


def oracle_voronoi(points) -> OracleDiagram:
    """Clip the bisector of every pair by the circumcenters it forms with all
    other sites.

    Works in the point set's scaled integer frame.  For the pair (i, j) and a
    third site k, the circle through the three has its center on B(i, j) at
    signed offset ``t`` along ``w = rot90(j - i)`` from the midpoint; k claims
    the part of the bisector beyond that center on k's side of line ij.
    """
    ps = as_pointset(points)
    xs, ys = ps.xs, ps.ys
    n = len(xs)
    near = [
        sorted((k for k in range(n) if k != i),
               key=lambda k: (xs[k] - xs[i]) ** 2 + (ys[k] - ys[i]) ** 2)[:_PROBE_NEIGHBORS]
        for i in range(n)
    ]
    edges: list[VoronoiEdge] = []
    for i in range(n):
        for j in range(i + 1, n):
            if _clip(xs, ys, i, j, near[i] + near[j]) is None:
                continue
            clipped = _clip(xs, ys, i, j, range(n))
            if clipped is None:
                continue
            edges.append(_to_edge(ps, i, j, *clipped))
    if n >= 3 and any(e.a is None and e.b is None for e in edges):
        raise GeneralPositionViolation("collinear", (0, 1, 2), "all sites are collinear")
    vertices = {v for e in edges for v in (e.a, e.b) if v is not None}
    cells: dict[int, list[VoronoiEdge]] = {k: [] for k in range(n)}
    for e in edges:
        cells[e.i].append(e)
        cells[e.j].append(e)
    return OracleDiagram(vertices, edges, cells)


def _clip(xs, ys, i, j, candidates):
    """Offsets ``(lo, hi)`` as Fractions (None for unbounded) or None if empty."""
    qx, qy = xs[j] - xs[i], ys[j] - ys[i]
    q2 = qx * qx + qy * qy
    lo = hi = None
    lo_k = hi_k = -1
    for k in candidates:
        if k == i or k == j:
            continue
        kx, ky = xs[k] - xs[i], ys[k] - ys[i]
        side = qx * ky - qy * kx  # = k . w
        if side == 0:
            # k on line ij covers the whole bisector iff it sits between i and j
            if 0 < kx * qx + ky * qy < q2:
                return None
            continue
        k2 = kx * kx + ky * ky
        # circumcenter of (0, q, k) is (cx, cy) / d
        d = 2 * side
        cx = ky * q2 - qy * k2
        cy = qx * k2 - kx * q2
        t = Fraction(qx * cy - qy * cx, d * q2)
        if side > 0:
            if hi is None or t < hi:
                hi, hi_k = t, k
            elif t == hi and k != hi_k:
                raise GeneralPositionViolation("cocircular", (i, j, hi_k, k))
        else:
            if lo is None or t > lo:
                lo, lo_k = t, k
            elif t == lo and k != lo_k:
                raise GeneralPositionViolation("cocircular", (i, j, lo_k, k))
        if lo is not None and hi is not None and lo >= hi:
            return None
    return lo, hi


def _to_edge(ps, i, j, lo, hi) -> VoronoiEdge:
    xs, ys = ps.xs, ps.ys
    wx, wy = ys[i] - ys[j], xs[j] - xs[i]
    mx, my = Fraction(xs[i] + xs[j], 2), Fraction(ys[i] + ys[j], 2)

    def at(t):
        return (mx + t * wx) / ps.scale, (my + t * wy) / ps.scale

    a = at(lo) if lo is not None else None
    b = at(hi) if hi is not None else None
    d = _primitive_dir(wx, wy)
    return VoronoiEdge(
        i, j, a, b,
        None if a is not None else (-d[0], -d[1]),
        None if b is not None else d,
    )


def audit_diagram(points, diagram: OracleDiagram) -> list[str]:
    """Self-consistency problems of a diagram; empty when it checks out.

    Sample points on every edge must be equidistant from the edge's two sites
    and strictly farther from all others, and with a vertex at infinity
    Euler's formula gives ``E = V + n - 1`` for n >= 3.
    """
    ps = as_pointset(points)
    pts = list(ps)
    problems = []
    for e in diagram.edges:
        for z in _samples(e):
            di = _d2(z, pts[e.i])
            if di != _d2(z, pts[e.j]):
                problems.append(f"edge {e.pair}: sample {z} not equidistant")
            for k, pk in enumerate(pts):
                if k not in (e.i, e.j) and _d2(z, pk) <= di:
                    problems.append(f"edge {e.pair}: site {k} as close at {z}")
                    break
    n = len(pts)
    if n >= 3 and len(diagram.edges) != len(diagram.vertices) + n - 1:
        problems.append(
            f"Euler: {len(diagram.edges)} edges, {len(diagram.vertices)} vertices, {n} cells"
        )
    return problems


def _d2(a, b):
    return (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2


def _samples(e: VoronoiEdge):
    if e.a is not None and e.b is not None:
        return [((e.a[0] + e.b[0]) / 2, (e.a[1] + e.b[1]) / 2)]
    if e.a is not None:
        return [(e.a[0] + e.b_dir[0], e.a[1] + e.b_dir[1])]
    if e.b is not None:
        return [(e.b[0] + e.a_dir[0], e.b[1] + e.a_dir[1])]
    return []


def oracle_delaunay(points) -> set[DelaunayEdge]:
    return oracle_voronoi(points).delaunay_edges()


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def oracle_emst(points) -> set[DelaunayEdge]:
    """Kruskal over the complete graph with exact squared lengths."""
    ps = as_pointset(points)
    pts = list(ps)
    n = len(pts)
    weighted = sorted(
        (_d2(pts[i], pts[j]), i, j) for i in range(n) for j in range(i + 1, n)
    )
    for (w1, i1, j1), (w2, i2, j2) in zip(weighted, weighted[1:]):
        if w1 == w2:
            raise TieDetected(f"pairs ({i1}, {j1}) and ({i2}, {j2}) have equal length")
    uf = _UnionFind(n)
    tree = set()
    for _, i, j in weighted:
        if uf.union(i, j):
            tree.add(DelaunayEdge(i, j))
            if len(tree) == n - 1:
                break
    return tree


def oracle_hull(points) -> list[int]:
    """Strict convex hull, counterclockwise from the lexicographically smallest site."""
    ps = as_pointset(points)
    pts = list(ps)
    order = sorted(range(len(pts)), key=lambda k: (pts[k].x, pts[k].y))
    if len(order) <= 2:
        return order

    def cross(o, a, b):
        return (pts[a].x - pts[o].x) * (pts[b].y - pts[o].y) - (
            pts[a].y - pts[o].y
        ) * (pts[b].x - pts[o].x)

    lower: list[int] = []
    for k in order:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], k) <= 0:
            lower.pop()
        lower.append(k)
    upper: list[int] = []
    for k in reversed(order):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], k) <= 0:
            upper.pop()
        upper.append(k)
    return lower[:-1] + upper[:-1]


def bottleneck_path_exists(points, edges, p: int, q: int) -> bool:
    """Whether ``edges`` join p and q using only edges shorter than pq."""
    ps = as_pointset(points)
    pts = list(ps)
    limit = _d2(pts[p], pts[q])
    uf = _UnionFind(len(pts))
    for e in edges:
        if _d2(pts[e.i], pts[e.j]) < limit:
            uf.union(e.i, e.j)
    return uf.find(p) == uf.find(q)
